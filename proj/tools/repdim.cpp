// repdim: character tables and minimal faithful degrees of small groups.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "repdim/cache.hpp"
#include "repdim/corpus.hpp"
#include "repdim/dixon.hpp"
#include "repdim/error.hpp"
#include "repdim/faithful.hpp"
#include "repdim/group_spec.hpp"
#include "repdim/named_groups.hpp"
#include "repdim/table_json.hpp"
#include "repdim/verify.hpp"

namespace {

using namespace repdim;

enum Exit { kOk = 0, kMismatch = 1, kParse = 2, kBound = 3 };

struct Options {
  std::string spec;
  std::string file;
  std::string output;
  std::string cache = "rw";
  std::string filter;
  std::size_t bound = BuildOptions{}.order_bound;
  bool pretty = false;
  bool gap_zero = false;
};

TableCache open_cache(const Options& o) { return TableCache(default_cache_dir(), parse_cache_mode(o.cache)); }

std::shared_ptr<const CharacterTable> load_table(const Options& o, const Group& g) {
  const auto cached = cached_table(g, open_cache(o));
  if (cached.status == CacheStatus::Corrupt)
    std::cerr << "warning: cache entry for " << g.spec() << " failed its checksum; recomputed\n";
  return cached.table;
}

std::string row_label(const CharacterTable& t, std::size_t r) {
  return "X." + std::to_string(r + 1) + " (degree " + std::to_string(t.characters[r].degree) + ")";
}

void print_delta(const CharacterTable& t, const DeltaResult& d) {
  std::cout << d.value << '\n' << "witness:";
  for (std::size_t i = 0; i < d.witness.size(); ++i) std::cout << (i ? " + " : " ") << row_label(t, d.witness[i]);
  std::cout << '\n';
}

void print_delta_irr(const CharacterTable& t, const Options& o) {
  const auto row = faithful_irreducible_row(t);
  if (!row) {
    std::cout << (o.gap_zero ? "0" : "does not exist") << '\n';
    return;
  }
  std::cout << t.characters[*row].degree << '\n' << "witness: " << row_label(t, *row) << '\n';
}

int cmd_table(const Options& o) {
  const Group g = named_group(o.spec, BuildOptions{o.bound});
  const auto cached = cached_table(g, open_cache(o));
  if (o.pretty)
    std::cout << pretty_table(*cached.table);
  else
    std::cout << cached.payload << '\n';
  return kOk;
}

int cmd_delta(const Options& o) {
  const Group g = named_group(o.spec, BuildOptions{o.bound});
  const auto t = load_table(o, g);
  print_delta(*t, delta(*t));
  return kOk;
}

int cmd_delta_irr(const Options& o) {
  const Group g = named_group(o.spec, BuildOptions{o.bound});
  print_delta_irr(*load_table(o, g), o);
  return kOk;
}

int cmd_verify(const Options& o) {
  const BuildOptions bo{o.bound};
  const auto spec = parse_group_spec(o.spec);
  const Group g = build_group(spec, bo);
  const auto t = load_table(o, g);
  const auto report = verify_group(g, spec, *t, bo);
  std::cout << format_report(report);
  if (report.predictions.empty()) std::cout << "  (no closed-form prediction applies)\n";
  return report.passed() ? kOk : kMismatch;
}

int cmd_corpus(const Options& o) {
  const auto scratch = std::filesystem::temp_directory_path() / ("repdim-corpus-" + std::to_string(::getpid()));
  bool all = true;
  std::size_t ran = 0;
  for (const auto& c : acceptance_criteria(scratch)) {
    if (!matches_filter(c, o.filter)) continue;
    ++ran;
    const auto outcome = c.run();
    all = all && outcome.passed;
    std::cout << (outcome.passed ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << '\n';
    if (!outcome.passed)
      for (const auto& line : outcome.details) std::cout << "        " << line << '\n';
  }
  if (ran == 0) std::cout << "no criteria match '" << o.filter << "'\n";
  return all ? kOk : kMismatch;
}

int cmd_export(const Options& o) {
  const Group g = named_group(o.spec, BuildOptions{o.bound});
  const auto cached = cached_table(g, open_cache(o));
  if (o.output.empty() || o.output == "-") {
    std::cout << cached.payload << '\n';
  } else {
    std::ofstream out(o.output, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + o.output);
    out << cached.payload << '\n';
  }
  return kOk;
}

int cmd_import(const Options& o) {
  std::stringstream buf;
  if (o.file == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(o.file, std::ios::binary);
    if (!in) throw ParseError("cannot read " + o.file);
    buf << in.rdbuf();
  }
  const auto t = import_table(buf.str());
  if (o.pretty) std::cout << pretty_table(t);
  std::cout << "delta: ";
  print_delta(t, delta(t));
  std::cout << "delta_irr: ";
  print_delta_irr(t, o);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables, delta_irr(G) and the representation dimension delta(G) of finite groups"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--cache", o.cache, "table cache: off, rw or ro")
        ->check(CLI::IsMember({"off", "rw", "ro"}));
    sub->add_option("--bound", o.bound, "largest group order to build");
  };
  auto spec_arg = [&](CLI::App* sub) { sub->add_option("spec", o.spec, "group spec, e.g. \"symmetric(5)\"")->required(); };

  auto* table = app.add_subcommand("table", "print the character table as JSON");
  spec_arg(table);
  common(table);
  table->add_flag("--pretty", o.pretty, "human-readable table");

  auto* del = app.add_subcommand("delta", "representation dimension with a witness");
  spec_arg(del);
  common(del);

  auto* irr = app.add_subcommand("delta-irr", "least degree of a faithful irreducible character");
  spec_arg(irr);
  common(irr);
  irr->add_flag("--gap-zero", o.gap_zero, "print 0 instead of 'does not exist'");

  auto* ver = app.add_subcommand("verify", "run every consistency check and closed-form prediction");
  spec_arg(ver);
  common(ver);

  auto* cor = app.add_subcommand("corpus", "run the acceptance corpus");
  cor->add_option("--filter", o.filter, "only criteria whose title, tag or id contains STR");

  auto* exp = app.add_subcommand("export", "write the table JSON to a file");
  spec_arg(exp);
  common(exp);
  exp->add_option("-o,--output", o.output, "output file (default: standard output)");

  auto* imp = app.add_subcommand("import", "read a table JSON and compute delta and delta_irr from it");
  imp->add_option("file", o.file, "table JSON file, or - for standard input")->required();
  imp->add_flag("--pretty", o.pretty, "also print the table");
  imp->add_flag("--gap-zero", o.gap_zero, "print 0 instead of 'does not exist'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*table) return cmd_table(o);
    if (*del) return cmd_delta(o);
    if (*irr) return cmd_delta_irr(o);
    if (*ver) return cmd_verify(o);
    if (*cor) return cmd_corpus(o);
    if (*exp) return cmd_export(o);
    if (*imp) return cmd_import(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const DomainError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kParse;
  } catch (const BoundError& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return kBound;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kOk;
}
