// Command-line front end over the C API.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gf4relax/gf4relax.h"

namespace {

enum Exit { kOk = 0, kNotRepresentable = 1, kUsage = 2, kVerifyFailed = 3 };

struct CliError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{kUsage, "cannot read '" + path + "'"};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void check(gf4r_status s) {
  if (s == GF4R_OK) return;
  const int code = s == GF4R_INTERNAL_ERROR ? kVerifyFailed : kUsage;
  throw CliError{code, std::string(gf4r_status_name(s)) + ": " + gf4r_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  gf4r_string_free(s);
  return out;
}

struct Matrix {
  gf4r_matrix* p = nullptr;
  explicit Matrix(const std::string& path) { check(gf4r_matrix_parse(read_file(path).c_str(), &p)); }
  ~Matrix() { gf4r_matrix_free(p); }
};

struct Matroid {
  gf4r_matroid* p = nullptr;
  Matroid() = default;
  explicit Matroid(const std::string& path) { check(gf4r_matroid_parse(read_file(path).c_str(), &p)); }
  ~Matroid() { gf4r_matroid_free(p); }
};

int cmd_scan(const std::string& file) {
  Matrix a(file);
  int found = 0;
  char* match = nullptr;
  check(gf4r_scan(a.p, &found, &match));
  const std::string m = take(match);
  if (found) {
    std::cout << "NOT-REPRESENTABLE " << m << "\n";
    return kNotRepresentable;
  }
  std::cout << "REPRESENTABLE\n";
  return kOk;
}

int cmd_relax(const std::string& file) {
  Matrix a(file);
  gf4r_relax_result r{};
  char* report = nullptr;
  check(gf4r_relax(a.p, &r, &report));
  std::cout << take(report);
  if (r.scan_representable != r.omega_representable || r.omega_representable != r.generic_representable) {
    std::cerr << "verdicts disagree\n";
    return kVerifyFailed;
  }
  return r.scan_representable ? kOk : kNotRepresentable;
}

int cmd_represent(const std::string& file) {
  Matroid m(file);
  char* out = nullptr;
  const gf4r_status s = gf4r_represent(m.p, &out);
  if (s == GF4R_NOT_REPRESENTABLE) {
    std::cout << "none\n";
    return kNotRepresentable;
  }
  check(s);
  std::cout << take(out);
  return kOk;
}

int cmd_fragility(const std::string& file, const std::string& targets) {
  Matroid m(file);
  int has = 0, fragile = 0;
  char* table = nullptr;
  check(gf4r_fragility(m.p, targets.c_str(), &has, &fragile, &table));
  std::cout << take(table);
  std::cout << "verdict: " << (!has ? "no minor" : fragile ? "fragile" : "not fragile") << "\n";
  return kOk;
}

int cmd_construct(const std::string& what, bool labels) {
  Matroid m;
  if (std::filesystem::is_regular_file(what))
    check(gf4r_matroid_from_path_sequence(read_file(what).c_str(), &m.p));
  else
    check(gf4r_matroid_named(what.c_str(), &m.p));
  if (labels) {
    char* l = nullptr;
    check(gf4r_matroid_labels(m.p, &l));
    std::cout << "# " << take(l) << "\n";
  }
  char* out = nullptr;
  check(gf4r_matroid_format(m.p, &out));
  std::cout << take(out);
  return kOk;
}

int cmd_catalog(int max, int splitters) {
  gf4r_catalog* c = nullptr;
  check(gf4r_catalog_generate(max, &c));
  std::unique_ptr<gf4r_catalog, void (*)(gf4r_catalog*)> hold(c, gf4r_catalog_free);
  char* out = nullptr;
  if (splitters > 0) {
    check(gf4r_catalog_splitters(c, splitters, &out));
  } else {
    check(gf4r_catalog_format(c, &out));
  }
  std::cout << take(out);
  return kOk;
}

struct RecordSink {
  std::ofstream file;
  int shown = 0;
};

void on_record(const char* line, int agree, const char*, void* user) {
  auto* sink = static_cast<RecordSink*>(user);
  if (sink->file.is_open()) sink->file << line << "\n";
  if (!agree && sink->shown < 10) {
    std::cerr << "disagreement " << line << "\n";
    ++sink->shown;
  }
}

gf4r_sweep_summary run(const gf4r_sweep_options& o, const std::string& records) {
  RecordSink sink;
  if (!records.empty()) {
    sink.file.open(records);
    if (!sink.file) throw CliError{kUsage, "cannot write '" + records + "'"};
  }
  gf4r_sweep_summary s{};
  check(gf4r_sweep(&o, on_record, &sink, &s));
  return s;
}

int cmd_sweep(const gf4r_sweep_options& o, const std::string& records) {
  const gf4r_sweep_summary s = run(o, records);
  std::cout << "agreement " << s.agree << "/" << s.total << "\n";
  std::cout << "scanner-ok oracles-no " << s.scan_ok_oracles_no << "\n";
  std::cout << "scanner-no oracles-ok " << s.scan_no_oracles_ok << "\n";
  std::cout << "omega-generic differ " << s.omega_generic_differ << "\n";
  std::cout << "path width 3 " << s.pw3_checked - s.pw3_fail << "/" << s.pw3_checked << "\n";
  std::cout << "non-binary " << s.nonbinary_checked - s.nonbinary_fail << "/" << s.nonbinary_checked << "\n";
  std::cout << "pairs " << s.pairs << " fragile-fail " << s.fragile_fail << " basis-fail " << s.basis_fail << "\n";
  const bool ok = s.agree == s.total && s.pw3_fail == 0 && s.nonbinary_fail == 0 && s.fragile_fail == 0 &&
                  s.basis_fail == 0;
  return ok ? kOk : kVerifyFailed;
}

int cmd_verify(const gf4r_sweep_options& o, const std::string& records) {
  const gf4r_sweep_summary s = run(o, records);
  std::cout << "pairs " << s.pairs << " checked " << s.structure_checked << " classes " << s.classes << "\n";
  std::cout << "outcomes";
  for (int i = 0; i < 6; ++i) std::cout << " " << static_cast<char>('a' + i) << "=" << s.outcome_first[i];
  std::cout << "\n";
  std::cout << "unmatched " << s.unmatched << "\n";
  return s.unmatched == 0 && s.structure_checked == s.pairs ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GF(4) relaxation toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gf4r_version());

  std::string file, targets = "u25,u35", what, records;
  bool labels = false;
  int max = 9, splitters = 0;
  gf4r_sweep_options so{2, 2, 0, 1, 0};

  auto* scan = app.add_subcommand("scan", "forbidden-submatrix verdict for an interior matrix");
  scan->add_option("matrix", file, "matrix file")->required();
  auto* relax = app.add_subcommand("relax", "build M from an interior, relax X, run all three verdicts");
  relax->add_option("matrix", file, "matrix file")->required();
  auto* represent = app.add_subcommand("represent", "GF(4) representation of a matroid, or none");
  represent->add_option("matroid", file, "matroid file")->required();
  auto* fragility = app.add_subcommand("fragility", "deletable/contractible table");
  fragility->add_option("matroid", file, "matroid file")->required();
  fragility->add_option("--targets", targets, "u24 or u25,u35")->check(CLI::IsMember({"u24", "u25,u35"}));
  auto* construct = app.add_subcommand("construct", "named matroid or path-sequence file");
  construct->add_option("what", what, std::string("name (") + gf4r_named_list() + ") or file")->required();
  construct->add_flag("--labels", labels, "print the labels as a comment line first");
  auto* catalog = app.add_subcommand("catalog", "fragile class catalog");
  catalog->add_option("--max", max, "largest size")->check(CLI::Range(5, 12));
  catalog->add_option("--splitters", splitters, "report splitter checks for entries of this size instead");
  auto* sweep = app.add_subcommand("sweep", "three-way verdict sweep over interiors");
  auto* verify = app.add_subcommand("verify", "structure outcome campaign over the sweep pairs");
  for (auto* sub : {sweep, verify}) {
    sub->add_option("--rows", so.rows, "interior rows")->check(CLI::Range(1, 4));
    sub->add_option("--cols", so.cols, "interior columns")->check(CLI::Range(1, 4));
    sub->add_option("--sample", so.sample, "random interiors instead of all");
    sub->add_option("--seed", so.seed, "sample seed");
    sub->add_option("--records", records, "write one record per line to this file");
  }
  verify->add_option("--max-elements", so.structure_max, "largest matched size (default rows + cols + 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*scan) return cmd_scan(file);
    if (*relax) return cmd_relax(file);
    if (*represent) return cmd_represent(file);
    if (*fragility) return cmd_fragility(file, targets);
    if (*construct) return cmd_construct(what, labels);
    if (*catalog) return cmd_catalog(max, splitters);
    if (*sweep) return cmd_sweep(so, records);
    if (*verify) {
      if (so.structure_max == 0) so.structure_max = so.rows + so.cols + 2;
      return cmd_verify(so, records);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kUsage;
}
