// Command-line front end: verification suites, the index table, Verlinde
// numbers and Weyl dimensions.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "twistor/errors.hpp"
#include "twistor/geometry.hpp"
#include "twistor/report.hpp"
#include "twistor/representation.hpp"
#include "twistor/verlinde.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

int cmd_verify(const std::string& selector, const std::string& format) {
  const auto& names = twistor::suite_selectors();
  if (std::find(names.begin(), names.end(), selector) == names.end()) {
    std::cerr << "twistor: unknown selector '" << selector << "'; expected one of:";
    for (const auto& n : names) std::cerr << ' ' << n;
    std::cerr << '\n';
    return kUsage;
  }
  const auto report = twistor::run_suite(selector);
  if (format == "json")
    std::cout << twistor::to_json(report).dump(2) << '\n';
  else
    std::cout << twistor::render_text(report);
  return report.ok() ? kOk : kFailed;
}

int cmd_table(int kmax, const std::string& format) {
  const auto rows = twistor::index_table(kmax);
  if (format == "json")
    std::cout << twistor::to_json(rows).dump(2) << '\n';
  else
    std::cout << twistor::render_text(rows);
  return kOk;
}

int cmd_verlinde(int genus, int level, const std::string& method, bool cross_check) {
  const twistor::VerlindeParams p{genus, level};
  if (genus < 2 || level < 1) {
    std::cerr << "twistor: need --genus >= 2 and --level >= 1\n";
    return kUsage;
  }
  mpz_class value;
  try {
    if (method == "float") {
      const auto f = twistor::verlinde_float(p);
      value = f.rounded;
      std::cout << value.get_str() << '\n';
      std::cout << "method: float, raw " << std::setprecision(17) << f.raw << ", residual " << std::scientific
                << std::setprecision(3) << f.residual << std::defaultfloat << '\n';
    } else {
      value = twistor::verlinde_number(p);
      std::cout << value.get_str() << '\n';
      std::cout << "method: exact in Q(zeta_" << 4 * level << "), residual 0\n";
    }
  } catch (const twistor::NonIntegral& e) {
    std::cerr << "twistor: " << e.what() << '\n';
    return kFailed;
  } catch (const twistor::FloatUnreliable& e) {
    std::cerr << "twistor: " << e.what() << '\n';
    return kFailed;
  }
  if (!cross_check) return kOk;

  if (genus == 3) {
    const auto d = twistor::index_d_direct(twistor::geometry()).poly;
    const twistor::Rational expected = d(level - 1);
    const bool ok = expected == twistor::Rational(value);
    std::cout << "cross-check: d_" << level - 1 << " = " << expected.str() << (ok ? " (agrees)" : " (MISMATCH)") << '\n';
    return ok ? kOk : kFailed;
  }
  // Other genera: compare the two evaluation methods where floats are reliable.
  try {
    const auto other = method == "float" ? twistor::verlinde_number(p) : twistor::verlinde_float(p).rounded;
    const bool ok = other == value;
    std::cout << "cross-check: " << (method == "float" ? "exact " : "float ") << other.get_str()
              << (ok ? " (agrees)" : " (MISMATCH)") << '\n';
    return ok ? kOk : kFailed;
  } catch (const twistor::FloatUnreliable& e) {
    std::cout << "cross-check: skipped (" << e.what() << ")\n";
    return kOk;
  }
}

int cmd_dims(int rank, const std::string& weight_csv) {
  std::vector<long> weight;
  std::stringstream ss(weight_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      weight.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      std::cerr << "twistor: bad weight entry '" << item << "'\n";
      return kUsage;
    }
  }
  try {
    std::cout << twistor::weyl_dim(rank, weight).get_str() << '\n';
  } catch (const twistor::NonDominant& e) {
    std::cerr << "twistor: weight is not dominant: " << e.what() << '\n';
    return kUsage;
  } catch (const twistor::InvalidArgument& e) {
    std::cerr << "twistor: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact characteristic-class and index computations for a quaternionic twistor geometry"};
  app.set_version_flag("--version", std::string(twistor::kToolVersion));
  app.require_subcommand(1);

  std::string selector = "all", verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("selector", selector, "Suite to run")->check(CLI::IsMember(twistor::suite_selectors()));
  verify->add_option("--format", verify_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  int kmax = 8;
  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "Print a_k, b_k, d_k");
  table->add_option("--kmax", kmax, "Largest k")->check(CLI::Range(0, 1000));
  table->add_option("--format", table_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  int genus = 0, level = 0;
  std::string method = "exact";
  bool cross_check = false;
  auto* verlinde = app.add_subcommand("verlinde", "Evaluate the Verlinde number");
  verlinde->add_option("--genus", genus, "Genus g >= 2")->required();
  verlinde->add_option("--level", level, "Level m >= 1")->required();
  verlinde->add_option("--method", method, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  verlinde->add_flag("--cross-check", cross_check, "Compare against an independent computation");

  int rank = 0;
  std::string weight;
  auto* dims = app.add_subcommand("dims", "Weyl dimension of an so(2n) module");
  dims->add_option("--rank", rank, "n")->required();
  dims->add_option("--weight", weight, "Highest weight l1,...,ln")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(selector, verify_format);
    if (*table) return cmd_table(kmax, table_format);
    if (*verlinde) return cmd_verlinde(genus, level, method, cross_check);
    if (*dims) return cmd_dims(rank, weight);
  } catch (const twistor::Error& e) {
    std::cerr << "twistor: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
