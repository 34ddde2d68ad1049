// Command-line front end: word-level subcommands (factorize, stdfact, isf,
// psi, omega), permutation-level subcommands (desasc, classify, bona, hat,
// phi, xi, fs and inverses), and the exhaustive verification drivers.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oddeven/lyndon.hpp"
#include "oddeven/necklaces.hpp"
#include "oddeven/parity_bijection.hpp"
#include "oddeven/permutations.hpp"
#include "oddeven/series.hpp"
#include "oddeven/verify.hpp"
#include "oddeven/words.hpp"

namespace {

using nlohmann::json;
using namespace oddeven;

Word parse_word(const std::string& text, int alphabet) {
  return word_from_text(text, alphabet > 0 ? alphabet : 26);
}

std::vector<int> parse_set(const std::string& text) {
  std::vector<int> elements;
  if (text.empty()) return elements;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    elements.push_back(std::stoi(item));
  }
  return elements;
}

std::string set_text(const std::vector<int>& elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elements[i]);
  }
  return out + "}";
}

void print_permutation(const Permutation& p, bool cycles) {
  std::cout << (cycles ? cycle_text(p) : one_line_text(p)) << "\n";
}

void print_trace_records(const BijectionTrace& trace) {
  for (std::size_t i = 0; i < trace.rows.size(); ++i) {
    const TraceRow& row = trace.rows[i];
    json rec;
    rec["step"] = i;
    rec["rule"] = row.rule ? json(std::string(rule_name(*row.rule))) : json();
    rec["O"] = to_text(row.state.odd);
    rec["E"] = to_text(row.state.even);
    std::cout << rec.dump() << "\n";
  }
}

int run_bijection(const std::string& text, int alphabet, bool trace,
                  const std::string& format, bool inverse) {
  Word w = parse_word(text, alphabet);
  BijectionRun run = inverse ? omega(w) : psi(w);
  if (!trace) {
    std::cout << to_text(run.image) << "\n";
    return 0;
  }
  if (format == "records") {
    print_trace_records(run.trace);
  } else {
    std::cout << (inverse ? render_omega_table(run.trace)
                          : render_psi_table(run.trace));
  }
  return 0;
}

json subset_json(unsigned mask, int n) {
  json out = json::array();
  for (int j = 1; j < n; ++j) {
    if (mask & (1u << (j - 1))) out.push_back(j);
  }
  return out;
}

int run_verify_counts(int n, const std::string& format) {
  CountReport report = verify_theorem_counts(n);
  if (format == "records") {
    for (const CountRow& row : report.exact_rows) {
      json rec{{"type", "exact"},
               {"set", subset_json(row.mask, n)},
               {"odd", row.odd_count},
               {"even", row.even_count},
               {"ok", row.pass}};
      std::cout << rec.dump() << "\n";
    }
    for (const CountRow& row : report.subset_rows) {
      json rec{{"type", "subset"},
               {"set", subset_json(row.mask, n)},
               {"odd", row.odd_count},
               {"even", row.even_count},
               {"ok", row.pass}};
      std::cout << rec.dump() << "\n";
    }
    json summary{{"type", "summary"},
                 {"inclusion_exclusion", report.inclusion_exclusion_ok},
                 {"closed_form", report.closed_form},
                 {"totals_ok", report.totals_ok},
                 {"pass", report.pass}};
    std::cout << summary.dump() << "\n";
  } else {
    std::cout << render(report);
  }
  return report.pass ? 0 : 1;
}

int run_verify_fs(int n, const std::string& format) {
  FsReport report = verify_fs_bijectivity(n);
  if (format == "records") {
    for (const FsRow& row : report.rows) {
      json rec{{"type", "row"},
               {"set", subset_json(row.mask, n)},
               {"domain", row.domain_size},
               {"codomain", row.codomain_size},
               {"ok", row.pass}};
      std::cout << rec.dump() << "\n";
    }
    json summary{{"type", "summary"},
                 {"maps_checked", report.maps_checked},
                 {"pass", report.pass}};
    std::cout << summary.dump() << "\n";
  } else {
    std::cout << render(report);
  }
  return report.pass ? 0 : 1;
}

int run_verify_gf(int k, int degree, const std::string& format) {
  IdentityReport report = verify_gf_identity(k, degree);
  if (format == "records") {
    json rec{{"k", report.var_count},
             {"degree", report.degree_cap},
             {"pass", report.pass}};
    if (report.first_mismatch) {
      rec["mismatch"] = {{"exponents", report.first_mismatch->exponents},
                         {"lhs", report.first_mismatch->lhs_coefficient},
                         {"rhs", report.first_mismatch->rhs_coefficient}};
    }
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << render(report);
  }
  return report.pass ? 0 : 1;
}

std::vector<int> parse_number_word(const std::string& text) {
  std::vector<int> values;
  std::istringstream in(text);
  int v;
  while (in >> v) values.push_back(v);
  if (!in.eof()) throw std::invalid_argument("hat: malformed number word");
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bijections between odd and even Lyndon factorizations and "
               "between odd- and even-cycle permutations"};
  app.require_subcommand(1);

  // shared option bags; each subcommand reads only what it registered
  std::string word_text, wrt_text = "inf", set_spec, perm_text, necklace_text_arg;
  std::string format = "text";
  int alphabet = 0;
  int n = 0, k = 0, degree = 0;
  bool trace = false, cycles = false, inverse = false;
  int exit_code = 0;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or records")
        ->check(CLI::IsMember({"text", "records"}));
  };

  auto* factorize_cmd =
      app.add_subcommand("factorize", "Lyndon factorization of a word");
  factorize_cmd->add_option("word", word_text)->required();
  factorize_cmd->add_option("--alphabet", alphabet, "alphabet size (default 26)");
  factorize_cmd->callback([&] {
    std::cout << render_factorization(parse_word(word_text, alphabet)) << "\n";
  });

  auto* stdfact_cmd = app.add_subcommand(
      "stdfact", "standard factorization of a Lyndon word");
  stdfact_cmd->add_option("word", word_text)->required();
  stdfact_cmd->add_option("--alphabet", alphabet);
  stdfact_cmd->callback([&] {
    std::cout << render_standard_factorization(parse_word(word_text, alphabet))
              << "\n";
  });

  auto* isf_cmd = app.add_subcommand(
      "isf", "iterated standard factorization with respect to a word or inf");
  isf_cmd->add_option("word", word_text)->required();
  isf_cmd->add_option("--wrt", wrt_text, "reference word, or \"inf\"");
  isf_cmd->add_option("--alphabet", alphabet);
  isf_cmd->callback([&] {
    WordOrInf wrt = wrt_text == "inf"
                        ? WordOrInf{Infinity{}}
                        : WordOrInf{parse_word(wrt_text, alphabet)};
    std::cout << render_isf(isf(parse_word(word_text, alphabet), wrt)) << "\n";
  });

  auto* desasc_cmd =
      app.add_subcommand("desasc", "descent and ascent sets of a permutation");
  desasc_cmd->add_option("perm", perm_text)->required();
  desasc_cmd->callback([&] {
    auto b = boundary_sets(permutation_from_text(perm_text));
    std::cout << "Des=" << set_text(b.descents) << " Asc=" << set_text(b.ascents)
              << "\n";
  });

  auto* classify_cmd =
      app.add_subcommand("classify", "cycle-parity class of a permutation");
  classify_cmd->add_option("perm", perm_text)->required();
  classify_cmd->callback([&] {
    std::cout << parity_name(classify_parity(permutation_from_text(perm_text)))
              << "\n";
  });

  auto* bona_cmd = app.add_subcommand(
      "bona", "pairing construction from odd cycles to even cycles (even n)");
  bona_cmd->add_option("perm", perm_text)->required();
  bona_cmd->add_flag("--cycles", cycles, "print cycle form");
  bona_cmd->callback([&] {
    print_permutation(bona_map(permutation_from_text(perm_text)), cycles);
  });

  auto* hat_cmd = app.add_subcommand(
      "hat", "hat transform between cycle form and a one-line word");
  hat_cmd->add_option("input", perm_text)->required();
  hat_cmd->add_flag("--inverse", inverse, "input is a hat word");
  hat_cmd->add_flag("--cycles", cycles, "print inverse in cycle form");
  hat_cmd->callback([&] {
    if (inverse) {
      print_permutation(foata_hat_inverse(parse_number_word(perm_text)), cycles);
      return;
    }
    auto word = foata_hat(permutation_from_text(perm_text));
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i > 0) std::cout << ' ';
      std::cout << word[i];
    }
    std::cout << "\n";
  });

  auto* phi_cmd = app.add_subcommand(
      "phi", "letter-block necklace multiset of a permutation (Des within S)");
  phi_cmd->add_option("perm", perm_text)->required();
  phi_cmd->add_option("--set", set_spec, "S as comma-separated positions");
  phi_cmd->callback([&] {
    auto p = permutation_from_text(perm_text);
    auto s = SubsetS::make(p.size(), parse_set(set_spec));
    std::cout << necklace_text(phi(s, p)) << "\n";
  });

  auto* phi_inv_cmd = app.add_subcommand(
      "phi-inv", "permutation from a necklace multiset by lexicographic ranks");
  phi_inv_cmd->add_option("necklaces", necklace_text_arg)->required();
  phi_inv_cmd->add_option("--set", set_spec);
  phi_inv_cmd->add_flag("--cycles", cycles);
  phi_inv_cmd->callback([&] {
    auto m = necklaces_from_text(necklace_text_arg);
    auto s = SubsetS::make(m.total_length(), parse_set(set_spec));
    print_permutation(phi_inverse(s, m), cycles);
  });

  auto* xi_cmd = app.add_subcommand(
      "xi", "letter-block necklace multiset of a permutation (Asc within S)");
  xi_cmd->add_option("perm", perm_text)->required();
  xi_cmd->add_option("--set", set_spec);
  xi_cmd->callback([&] {
    auto p = permutation_from_text(perm_text);
    auto s = SubsetS::make(p.size(), parse_set(set_spec));
    std::cout << necklace_text(xi(s, p)) << "\n";
  });

  auto* xi_inv_cmd = app.add_subcommand(
      "xi-inv", "permutation from distinct odd necklaces by alternating ranks");
  xi_inv_cmd->add_option("necklaces", necklace_text_arg)->required();
  xi_inv_cmd->add_option("--set", set_spec);
  xi_inv_cmd->add_flag("--cycles", cycles);
  xi_inv_cmd->callback([&] {
    auto m = necklaces_from_text(necklace_text_arg);
    auto s = SubsetS::make(m.total_length(), parse_set(set_spec));
    print_permutation(xi_inverse(s, m), cycles);
  });

  auto* psi_cmd = app.add_subcommand(
      "psi", "odd-distinct to even Lyndon factorization bijection");
  psi_cmd->add_option("word", word_text)->required();
  psi_cmd->add_option("--alphabet", alphabet);
  psi_cmd->add_flag("--trace", trace, "print the step table instead");
  add_format(psi_cmd);
  psi_cmd->callback([&] {
    exit_code = run_bijection(word_text, alphabet, trace, format, false);
  });

  auto* omega_cmd = app.add_subcommand(
      "omega", "even to odd-distinct Lyndon factorization bijection");
  omega_cmd->add_option("word", word_text)->required();
  omega_cmd->add_option("--alphabet", alphabet);
  omega_cmd->add_flag("--trace", trace);
  add_format(omega_cmd);
  omega_cmd->callback([&] {
    exit_code = run_bijection(word_text, alphabet, trace, format, true);
  });

  auto* fs_cmd = app.add_subcommand(
      "fs", "descent-respecting bijection from odd cycles to even cycles");
  fs_cmd->add_option("perm", perm_text)->required();
  fs_cmd->add_option("--set", set_spec);
  fs_cmd->add_flag("--cycles", cycles);
  fs_cmd->callback([&] {
    auto p = permutation_from_text(perm_text);
    auto s = SubsetS::make(p.size(), parse_set(set_spec));
    print_permutation(f_s(s, p), cycles);
  });

  auto* fs_inv_cmd = app.add_subcommand("fs-inv", "inverse of fs");
  fs_inv_cmd->add_option("perm", perm_text)->required();
  fs_inv_cmd->add_option("--set", set_spec);
  fs_inv_cmd->add_flag("--cycles", cycles);
  fs_inv_cmd->callback([&] {
    auto p = permutation_from_text(perm_text);
    auto s = SubsetS::make(p.size(), parse_set(set_spec));
    print_permutation(f_s_inverse(s, p), cycles);
  });

  auto* counts_cmd = app.add_subcommand(
      "verify-counts", "ascent/descent counting identities over S_n");
  counts_cmd->add_option("--n", n)->required();
  add_format(counts_cmd);
  counts_cmd->callback([&] { exit_code = run_verify_counts(n, format); });

  auto* vfs_cmd =
      app.add_subcommand("verify-fs", "exhaustive fs bijectivity sweep");
  vfs_cmd->add_option("--n", n)->required();
  add_format(vfs_cmd);
  vfs_cmd->callback([&] { exit_code = run_verify_fs(n, format); });

  auto* gf_cmd = app.add_subcommand(
      "verify-gf", "generating-function identity for Lyndon parities");
  gf_cmd->add_option("--k", k)->required();
  gf_cmd->add_option("--degree", degree)->required();
  add_format(gf_cmd);
  gf_cmd->callback([&] { exit_code = run_verify_gf(k, degree, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
