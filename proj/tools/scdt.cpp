// scdt: exact analysis of spherical s-distance t-designs.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "scdt/catalog.hpp"
#include "scdt/code_io.hpp"
#include "scdt/report.hpp"

namespace {

constexpr int kUsage = 2;

struct Target {
  scdt::SphericalCode code;
  std::optional<scdt::ExpectedProfile> expected;
};

Target resolve(const std::string& spec, bool deep) {
  const std::string prefix = "catalog:";
  if (spec.rfind(prefix, 0) == 0) {
    auto entry = scdt::catalog_entry(spec.substr(prefix.size()));
    if (entry.extended && !deep) throw scdt::CatalogError(entry.name + " is in the extended corpus; pass --deep");
    return {scdt::construct(entry.name), entry.expected};
  }
  return {scdt::load_code(spec), std::nullopt};
}

int emit(const scdt::Report& r) {
  std::cout << r.text;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of spherical designs and Delsarte codes"};
  app.require_subcommand(1);

  scdt::ReportOptions opt;
  std::string target;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("target", target, "code file or catalog:<name>")->required();
    sub->add_option("--workers", opt.workers, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_flag("--approx", opt.approx, "append untrusted decimal hints");
    sub->add_flag("--deep", opt.deep, "dense cross-checks and the extended corpus");
  };

  auto* analyze = app.add_subcommand("analyze", "full report for one code");
  add_common(analyze);
  auto* bound = app.add_subcommand("bound", "Levenshtein polynomial and LP certificate");
  add_common(bound);
  auto* scheme = app.add_subcommand("scheme", "association scheme tables");
  add_common(scheme);

  auto* catalog = app.add_subcommand("catalog", "built-in reference codes");
  catalog->require_subcommand(1);
  bool extended = false;
  auto* list = catalog->add_subcommand("list", "list codes with their expected profiles");
  list->add_flag("--extended", extended, "include the extended corpus");
  std::string emit_name, emit_path;
  auto* emit_cmd = catalog->add_subcommand("emit", "write a code file");
  emit_cmd->add_option("name", emit_name)->required();
  emit_cmd->add_option("path", emit_path)->required();

  int scan_s = 3, n_min = 3, n_max = 30;
  auto* scan = app.add_subcommand("scan", "parametric contradiction certificates");
  scan->add_option("--s", scan_s, "3, 4 or 5")->required()->check(CLI::IsMember({3, 4, 5}));
  scan->add_option("--n-min", n_min)->check(CLI::Range(2, 10000));
  scan->add_option("--n-max", n_max)->check(CLI::Range(2, 10000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*analyze) {
      auto t = resolve(target, opt.deep);
      return emit(scdt::analyze_report(t.code, opt, t.expected));
    }
    if (*bound) return emit(scdt::bound_report(resolve(target, opt.deep).code, opt));
    if (*scheme) return emit(scdt::scheme_report(resolve(target, opt.deep).code, opt));
    if (*list) return emit(scdt::catalog_list_report(extended));
    if (*emit_cmd) {
      scdt::emit(emit_name, emit_path);
      return 0;
    }
    if (*scan) {
      if (n_min > n_max) throw std::invalid_argument("--n-min exceeds --n-max");
      return emit(scdt::scan_report(scan_s, n_min, n_max));
    }
  } catch (const scdt::ParseError& e) {
    std::cerr << "error: " << target << ":" << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
