// ciq — finite-algebra workbench for crossed-inverse (CI) identities on
// Cayley tables: classify tables, derive J maps, enumerate all left CI
// structures at small orders, and machine-check that every one of them
// is a CI-quasigroup.
//
// Exit codes: 0 = success (and, for check, the table is CI);
//             1 = well-formed input that is NOT_LEFT_CI, or a theorem
//                 verification failure;
//             2 = input or usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ciq/ci.hpp"
#include "ciq/io.hpp"
#include "ciq/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ciq::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ciq::Error("cannot write '" + path + "'");
  out << content;
}

ciq::io::Format parse_format(const std::string& name) {
  return name == "json" ? ciq::io::Format::kJson : ciq::io::Format::kText;
}

ciq::SearchMode parse_mode(const std::string& name) {
  return name == "oracle" ? ciq::SearchMode::kOracle
                          : ciq::SearchMode::kPropagate;
}

std::string supplied_j_text(const ciq::CayleyTable& t, const ciq::TotalMap& j,
                            const ciq::CiReport& report) {
  std::string out;
  out += "supplied J:";
  for (int i = 0; i < j.order(); ++i) out += ' ' + std::to_string(j(i));
  out += '\n';
  out += std::string("left CI with supplied J: ") +
         (ciq::check_left_ci(t, j) ? "yes" : "no") + "\n";
  out += std::string("right CI with supplied J: ") +
         (ciq::check_right_ci(t, j) ? "yes" : "no") + "\n";
  out += std::string("supplied J equals derived jr: ") +
         (report.jr && *report.jr == j ? "yes" : "no") + "\n";
  return out;
}

nlohmann::ordered_json supplied_j_json(const ciq::CayleyTable& t,
                                       const ciq::TotalMap& j,
                                       const ciq::CiReport& report) {
  nlohmann::ordered_json extra;
  extra["map"] = j.image;
  extra["left_ci"] = ciq::check_left_ci(t, j);
  extra["right_ci"] = ciq::check_right_ci(t, j);
  extra["equals_derived_jr"] = report.jr && *report.jr == j;
  return extra;
}

int run_check(const std::string& path, const std::string& format_name) {
  const auto format = parse_format(format_name);
  const auto docs = ciq::io::parse_documents(read_file(path), path);
  if (docs.empty()) throw ciq::Error("'" + path + "' holds no table document");

  bool all_ci = true;
  std::vector<std::string> blocks;
  for (const ciq::io::TableDocument& doc : docs) {
    const ciq::CiReport report = ciq::classify(doc.table);
    all_ci = all_ci && report.classification != ciq::Classification::kNotLeftCi;
    if (format == ciq::io::Format::kJson) {
      auto j = ciq::io::report_to_json(report);
      if (doc.j) j["supplied_j"] = supplied_j_json(doc.table, *doc.j, report);
      // one pretty object for a single document, compact lines otherwise
      blocks.push_back(docs.size() == 1 ? j.dump(2) + "\n" : j.dump() + "\n");
    } else {
      std::string block = ciq::io::render_report(report, format);
      if (doc.j) block += supplied_j_text(doc.table, *doc.j, report);
      blocks.push_back(std::move(block));
    }
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i && format == ciq::io::Format::kText) std::cout << "\n";
    std::cout << blocks[i];
  }
  return all_ci ? kExitOk : kExitNegative;
}

int run_derive(const std::string& path) {
  const auto doc = ciq::io::parse_table(read_file(path), path);
  const auto j = ciq::derive_right_j(doc.table);
  if (!j) {
    std::cout << "no map J satisfies (x*y)*J(x) = y on this table\n";
    return kExitNegative;
  }
  std::cout << "J:";
  for (ciq::element_t v : j->image) std::cout << ' ' << v;
  std::cout << "\n";
  return kExitOk;
}

int run_solve(const std::string& path, int a, int b) {
  const auto doc = ciq::io::parse_table(read_file(path), path);
  const int n = doc.table.n;
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw ciq::Error("--a and --b must lie in [0, " + std::to_string(n) + ")");
  }
  const auto j = ciq::derive_right_j(doc.table);
  if (!j) {
    std::cout << "table is not left CI; the solution formula does not apply\n";
    return kExitNegative;
  }
  const ciq::element_t x =
      ciq::solve_left(doc.table, *j, a, b, /*check_precondition=*/true);
  std::cout << "x = " << x << "\n";
  std::cout << "check: " << a << "*" << x << " = " << doc.table.at(a, x)
            << "\n";
  return kExitOk;
}

int run_enumerate(int order, const std::string& mode_name, bool classes,
                  const std::string& out_path, int workers) {
  ciq::SearchConfig cfg;
  cfg.order = order;
  cfg.mode = parse_mode(mode_name);
  cfg.worker_count = workers;
  cfg.up_to_isomorphism = classes;

  const auto structures = ciq::enumerate_structures(cfg);
  const auto iso = ciq::group_into_classes(structures);
  std::cout << ciq::io::expectation_line(
                   order, cfg.mode, static_cast<std::int64_t>(structures.size()),
                   static_cast<std::int64_t>(iso.size()))
            << "\n";
  if (classes) {
    for (std::size_t i = 0; i < iso.size(); ++i) {
      std::cout << "class " << i << " size " << iso[i].size << "\n";
    }
  }

  if (!out_path.empty()) {
    std::string out;
    if (classes) {
      for (std::size_t i = 0; i < iso.size(); ++i) {
        if (i) out += "\n";
        out += "# class " + std::to_string(i) + " size " +
               std::to_string(iso[i].size) + "\n";
        out += ciq::io::render_table(ciq::io::TableDocument{
            iso[i].representative.table, iso[i].representative.jr, ""});
      }
    } else {
      for (std::size_t i = 0; i < structures.size(); ++i) {
        if (i) out += "\n";
        out += ciq::io::render_table(ciq::io::TableDocument{
            structures[i].table, structures[i].jr, ""});
      }
    }
    write_file(out_path, out);
  }
  return kExitOk;
}

int run_verify(int max_order, const std::string& mode_name,
               const std::string& format_name, int workers) {
  const auto format = parse_format(format_name);
  bool all_verified = true;
  for (int n = 1; n <= max_order; ++n) {
    ciq::SearchConfig cfg;
    cfg.order = n;
    cfg.mode = parse_mode(mode_name);
    cfg.worker_count = workers;
    const ciq::TheoremReport report = ciq::verify_theorem(cfg);
    all_verified = all_verified && report.verified();
    if (format == ciq::io::Format::kJson) {
      std::cout << ciq::io::report_to_json(report).dump() << "\n";
    } else {
      std::cout << ciq::io::render_report(report, format);
    }
  }
  return all_verified ? kExitOk : kExitNegative;
}

int run_random(int order, std::uint64_t seed, int count,
               const std::string& out_path) {
  std::string out;
  for (int i = 0; i < count; ++i) {
    if (i) out += "\n";
    const ciq::CayleyTable t =
        ciq::random_quasigroup(order, seed + static_cast<std::uint64_t>(i));
    out += ciq::io::render_table(ciq::io::TableDocument{t, std::nullopt, ""});
  }
  if (out_path.empty()) {
    std::cout << out;
  } else {
    write_file(out_path, out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finite-algebra workbench for crossed-inverse (CI) identities on "
      "Cayley tables"};
  app.require_subcommand(1);

  int workers = 0;
  app.add_option("--workers", workers,
                 "enumeration worker threads (0 = all available)")
      ->envname("WORKERS");

  std::string check_file, check_format = "text";
  auto* check = app.add_subcommand(
      "check", "classify a table file (and audit a supplied J, if any)");
  check->add_option("file", check_file, "table file")->required();
  check->add_option("--format", check_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string derive_file;
  auto* derive = app.add_subcommand(
      "derive-j", "derive the map J with (x*y)*J(x) = y from a table");
  derive->add_option("file", derive_file, "table file")->required();

  std::string solve_file;
  int solve_a = 0, solve_b = 0;
  auto* solve = app.add_subcommand(
      "solve", "solve a*x = b via the CI solution formula x = b*J(a)");
  solve->add_option("file", solve_file, "table file")->required();
  solve->add_option("--a", solve_a, "left factor a")->required();
  solve->add_option("--b", solve_b, "target b")->required();

  int enum_order = 0;
  std::string enum_mode = "propagate", enum_out;
  bool enum_classes = false;
  auto* enumerate = app.add_subcommand(
      "enumerate", "enumerate all left CI structures of one order");
  enumerate->add_option("--order", enum_order, "carrier size")->required();
  enumerate->add_option("--mode", enum_mode, "search engine")
      ->check(CLI::IsMember({"oracle", "propagate"}));
  enumerate->add_flag("--classes", enum_classes,
                      "report one representative per isomorphism class");
  enumerate->add_option("--out", enum_out,
                        "write structures (re-consumable by check)");

  int verify_max = 0;
  std::string verify_mode = "propagate", verify_format = "text";
  auto* verify = app.add_subcommand(
      "verify-theorem",
      "enumerate orders 1..N and check every structure is a CI-quasigroup");
  verify->add_option("--max-order", verify_max, "largest order")->required();
  verify->add_option("--mode", verify_mode, "search engine")
      ->check(CLI::IsMember({"oracle", "propagate"}));
  verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  int random_order = 0, random_count = 1;
  std::uint64_t random_seed = 0;
  std::string random_out;
  auto* random = app.add_subcommand(
      "random", "generate random quasigroups (seeded, reproducible)");
  random->add_option("--order", random_order, "carrier size")->required();
  random->add_option("--seed", random_seed, "base seed")->required();
  random->add_option("--count", random_count, "how many tables");
  random->add_option("--out", random_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return run_check(check_file, check_format);
    if (*derive) return run_derive(derive_file);
    if (*solve) return run_solve(solve_file, solve_a, solve_b);
    if (*enumerate) {
      return run_enumerate(enum_order, enum_mode, enum_classes, enum_out,
                           workers);
    }
    if (*verify) {
      return run_verify(verify_max, verify_mode, verify_format, workers);
    }
    if (*random) {
      return run_random(random_order, random_seed, random_count, random_out);
    }
  } catch (const ciq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
