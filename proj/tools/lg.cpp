// Batch command-line surface over the link catalog and the verification
// suites.  Exit status: 0 on success, 1 on any failed check or diagnostic,
// 2 on a usage error.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "lg/bracket.hpp"
#include "lg/linkcat.hpp"
#include "lg/verify.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

int default_parallelism() {
  if (const char* env = std::getenv("LG_PARALLEL")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

int usage_error_unknown_link(const std::string& selector) {
  std::cerr << "error: unknown link '" << selector << "'\nvalid links:\n";
  for (const auto& e : lg::catalog()) {
    std::cerr << "  " << e.name;
    if (!e.alias.empty()) std::cerr << " (" << e.alias << ")";
    std::cerr << "\n";
  }
  std::cerr << "  pretzel:p,q,r (odd 3 <= p < q < r)\n";
  return kExitUsage;
}

std::vector<lg::LinkEntry> resolve_links(const std::string& selector, bool& ok) {
  ok = true;
  if (selector == "all") return lg::catalog();
  auto e = lg::find_link(selector);
  if (!e) {
    ok = false;
    return {};
  }
  return {*e};
}

// Evaluates `fn` over the links with bounded parallelism, preserving catalog
// order in the output.
template <class F>
std::vector<std::string> map_links(const std::vector<lg::LinkEntry>& links, int parallel, F fn) {
  std::vector<std::string> results(links.size());
  if (parallel <= 1 || links.size() <= 1) {
    for (std::size_t i = 0; i < links.size(); ++i) results[i] = fn(links[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  const int n = std::min<int>(parallel, static_cast<int>(links.size()));
  std::mutex err_mu;
  std::exception_ptr first_error;
  for (int w = 0; w < n; ++w)
    workers.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= links.size()) return;
        try {
          results[i] = fn(links[i]);
        } catch (...) {
          std::lock_guard lock(err_mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  for (auto& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

int emit_polynomials(const std::vector<lg::LinkEntry>& links, const std::string& format,
                     int parallel, bool jones_mode) {
  auto render = [&](const lg::LinkEntry& e) -> std::string {
    const lg::LaurentPoly poly =
        jones_mode ? lg::jones(e) : lg::links_gould(e).polynomial;
    if (format == "plain") return poly.serialize(lg::PolyFormat::Plain, jones_mode ? "t" : "q");
    if (format == "json")
      return poly.serialize(lg::PolyFormat::Json, jones_mode ? "t" : "q");
    std::string csv;
    for (const auto& [exp, c] : poly.terms()) {
      csv += e.name + "," + std::to_string(exp.eq) + "," + std::to_string(exp.ep) + "," +
             c.str() + "\n";
    }
    return csv;
  };
  const auto results = map_links(links, parallel, render);
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < links.size(); ++i) {
      nlohmann::ordered_json row;
      row["link"] = links[i].name;
      row["invariant"] = jones_mode ? "jones" : "links-gould";
      row["polynomial"] = nlohmann::ordered_json::parse(results[i]);
      arr.push_back(std::move(row));
    }
    std::cout << arr.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "link,eq,ep,coeff\n";
    for (const auto& r : results) std::cout << r;
  } else {
    if (links.size() == 1) {
      std::cout << results[0] << "\n";
    } else {
      for (std::size_t i = 0; i < links.size(); ++i)
        std::cout << links[i].name << ": " << results[i] << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluation of the two-variable Links-Gould link invariant "
               "and the Jones polynomial over abstract tensor networks"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  std::string link_sel = "all";
  std::string format = "plain";
  std::string suites = "all";
  std::string checks = "inversion,chirality";
  int parallel = default_parallelism();
  int points = 20;
  std::uint64_t seed = 0;
  int max_n = 7;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate the two-variable invariant");
  eval->add_option("--link", link_sel, "Link name, 'all', or pretzel:p,q,r");
  eval->add_option("--format", format, "plain|json|csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  eval->add_option("--parallel", parallel, "Worker threads");

  CLI::App* jones = app.add_subcommand("jones", "Evaluate the Jones polynomial");
  jones->add_option("--link", link_sel, "Link name, 'all', or pretzel:p,q,r");
  jones->add_option("--format", format, "plain|json|csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  jones->add_option("--parallel", parallel, "Worker threads");

  CLI::App* verify = app.add_subcommand("verify", "Run R-matrix verification suites");
  verify->add_option("--suite", suites,
                     "Comma list of ybe,skein,inverse,caps,projectors,sigma-match,"
                     "limit,trig,spectral or 'all'");
  verify->add_option("--points", points, "Sample points per suite");
  verify->add_option("--seed", seed, "Random seed for sample points");
  verify->add_option("--format", format, "plain|json")
      ->check(CLI::IsMember({"plain", "json"}));

  CLI::App* scan = app.add_subcommand("scan-pretzels", "Scan the odd pretzel family");
  scan->add_option("--max", max_n, "Largest twist count (odd, >= 7)");
  scan->add_option("--check", checks, "Comma list of inversion,chirality");
  scan->add_option("--format", format, "plain|json")
      ->check(CLI::IsMember({"plain", "json"}));

  CLI::App* cat = app.add_subcommand("catalog", "List catalog entries");
  cat->add_option("--format", format, "plain|json")
      ->check(CLI::IsMember({"plain", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed() || jones->parsed()) {
      bool ok = false;
      const auto links = resolve_links(link_sel, ok);
      if (!ok) return usage_error_unknown_link(link_sel);
      return emit_polynomials(links, format, parallel, jones->parsed());
    }

    if (verify->parsed()) {
      std::vector<lg::CheckReport> reports;
      try {
        reports = lg::run_suites(split_csv(suites), points, seed);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what()
                  << "\nvalid suites: ybe skein inverse caps projectors sigma-match limit "
                     "trig spectral all\n";
        return kExitUsage;
      }
      bool all_pass = true;
      if (format == "json") {
        std::cout << lg::report_json(reports) << "\n";
        for (const auto& r : reports) all_pass &= r.pass;
      } else {
        for (const auto& r : reports) {
          std::cout << r.check << ": " << (r.pass ? "PASS" : "FAIL")
                    << " (points=" << r.points
                    << ", residual_nonzero_entries=" << r.residual_nonzero_entries << ")\n";
          all_pass &= r.pass;
        }
      }
      return all_pass ? 0 : kExitFail;
    }

    if (scan->parsed()) {
      if (max_n < 7 || max_n % 2 == 0) {
        std::cerr << "error: --max must be odd and >= 7\n";
        return kExitUsage;
      }
      const auto selected = split_csv(checks);
      bool want_inversion = false, want_chirality = false;
      for (const auto& c : selected) {
        if (c == "inversion") want_inversion = true;
        else if (c == "chirality") want_chirality = true;
        else {
          std::cerr << "error: unknown check '" << c << "' (valid: inversion, chirality)\n";
          return kExitUsage;
        }
      }
      const lg::PretzelScanReport rep = lg::scan_pretzels(max_n);
      bool pass = rep.count_matches();
      if (want_inversion) pass &= rep.all_inversion_symmetric;
      if (want_chirality) pass &= rep.all_chirality_detected;
      if (format == "json") {
        nlohmann::ordered_json j;
        j["max"] = rep.max_n;
        j["count"] = rep.entries.size();
        j["expected_count"] = rep.expected_count;
        j["pretzels"] = nlohmann::ordered_json::array();
        for (const auto& e : rep.entries) {
          nlohmann::ordered_json row;
          row["p"] = e.p;
          row["q"] = e.q;
          row["r"] = e.r;
          if (want_inversion) row["inversion_symmetric"] = e.inversion_symmetric;
          if (want_chirality) row["chirality_detected"] = e.chirality_detected;
          j["pretzels"].push_back(std::move(row));
        }
        j["pass"] = pass;
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& e : rep.entries) {
          std::cout << "pretzel(" << e.p << "," << e.q << "," << e.r << ")";
          if (want_inversion)
            std::cout << " inversion=" << (e.inversion_symmetric ? "symmetric" : "BROKEN");
          if (want_chirality)
            std::cout << " chirality=" << (e.chirality_detected ? "detected" : "NOT-DETECTED");
          std::cout << "\n";
        }
        std::cout << "count: " << rep.entries.size() << " (formula " << rep.expected_count
                  << ")\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
      }
      return pass ? 0 : kExitFail;
    }

    if (cat->parsed()) {
      if (format == "json") {
        std::cout << lg::catalog_json() << "\n";
      } else {
        for (const auto& e : lg::catalog()) {
          std::cout << e.name;
          if (!e.alias.empty()) std::cout << " (" << e.alias << ")";
          std::cout << "  components=" << e.components << " writhe=" << e.writhe
                    << " amphichiral=" << (e.amphichiral ? "yes" : "no") << " invertible="
                    << (e.invertible ? (*e.invertible ? "yes" : "no") : "unknown") << "\n";
        }
      }
      return 0;
    }
  } catch (const lg::DiagnosticError& e) {
    std::cerr << "diagnostic failure: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
