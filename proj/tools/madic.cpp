// Command-line front end over the C API.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "madic/madic.h"

namespace {

struct Options {
  std::optional<uint64_t> q, p, m, s, b, a, index, root_power, cap, n, k, d;
  std::optional<std::string> family, slots, generator, from;
  std::string output = "text";
};

void add_output(CLI::App* cmd, Options& o) {
  cmd->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_residue(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "Prime length p");
  cmd->add_option("--m", o.m, "m with m | p-1");
  cmd->add_option("--b", o.b, "Primitive root mod p (default: smallest)");
  cmd->add_option("--a", o.a, "Multiplier (default: smallest element of Q_1)");
}

void add_code(CLI::App* cmd, Options& o) {
  add_residue(cmd, o);
  cmd->add_option("--q", o.q, "Prime field size q");
  cmd->add_option("--family", o.family, "even-I, odd-I, even-II or odd-II");
  cmd->add_option("--index", o.index, "Code index within the family (field codes)");
  cmd->add_option("--root-power", o.root_power, "Use gamma^r as the primitive p-th root (default 1)");
  cmd->add_option("--cap", o.cap, "Maximum number of codewords to enumerate");
}

void add_ring(CLI::App* cmd, Options& o) {
  cmd->add_option("--s", o.s, "Ring parameter s, R = F_q[v]/(v^s - v)");
  cmd->add_option("--slots", o.slots, "Comma-separated field-code index per CRT component");
}

int fail(madic_status st) {
  std::cerr << "error: " << madic_last_error() << "\n";
  return st == MADIC_TOO_LARGE ? 2 : 1;
}

std::optional<std::string> read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& verb, const Options& o) {
  madic_params* params = madic_params_new();
  if (!params) return 1;
  madic_status st = MADIC_OK;
  const auto set_int = [&](const char* key, const std::optional<uint64_t>& v) {
    if (st == MADIC_OK && v) st = madic_params_set_int(params, key, *v);
  };
  const auto set_str = [&](const char* key, const std::optional<std::string>& v) {
    if (st == MADIC_OK && v) st = madic_params_set_string(params, key, v->c_str());
  };
  set_int("q", o.q);
  set_int("p", o.p);
  set_int("m", o.m);
  set_int("s", o.s);
  set_int("b", o.b);
  set_int("a", o.a);
  set_int("index", o.index);
  set_int("root_power", o.root_power);
  set_int("cap", o.cap);
  set_int("n", o.n);
  set_int("k", o.k);
  set_int("d", o.d);
  set_str("family", o.family);
  set_str("slots", o.slots);
  set_str("generator", o.generator);
  if (o.from) {
    const auto doc = read_file(*o.from);
    if (!doc) {
      madic_params_free(params);
      std::cerr << "error: cannot read " << *o.from << "\n";
      return 1;
    }
    set_str("document", doc);
  }
  if (st != MADIC_OK) {
    madic_params_free(params);
    return fail(st);
  }
  madic_result* result = nullptr;
  st = madic_run(verb.c_str(), params, &result);
  madic_params_free(params);
  if (st != MADIC_OK) return fail(st);
  if (o.output == "json")
    std::cout << madic_result_json(result) << "\n";
  else
    std::cout << madic_result_text(result);
  const int code = madic_result_success(result) ? 0 : 1;
  madic_result_free(result);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"m-adic residue codes over F_q and F_q[v]/(v^s - v)"};
  app.require_subcommand(1);
  Options o;

  auto* classes = app.add_subcommand("classes", "List the residue classes Q_0..Q_{m-1}");
  add_residue(classes, o);
  add_output(classes, o);

  auto* field = app.add_subcommand("field-code", "Construct one m-adic residue code over F_q");
  add_code(field, o);
  add_output(field, o);

  auto* ring = app.add_subcommand("ring-code", "Construct an m-adic residue code over F_q[v]/(v^s - v)");
  add_code(ring, o);
  add_ring(ring, o);
  add_output(ring, o);

  auto* distance = app.add_subcommand("distance", "Exact minimum distance and weight distribution");
  add_code(distance, o);
  add_ring(distance, o);
  distance->add_option("--generator", o.generator, "Generator polynomial, e.g. 1+2*x+x^3");
  distance->add_option("--n", o.n, "Length for --generator (default p)");
  distance->add_option("--from", o.from, "Exported code JSON file ('-' for stdin)");
  add_output(distance, o);

  auto* griesmer = app.add_subcommand("griesmer", "Griesmer bound check for [n,k,d]_q");
  griesmer->add_option("--n", o.n, "Length")->required();
  griesmer->add_option("--k", o.k, "Dimension")->required();
  griesmer->add_option("--d", o.d, "Minimum distance")->required();
  griesmer->add_option("--q", o.q, "Alphabet size")->required();
  add_output(griesmer, o);

  auto* verify = app.add_subcommand("verify-paper", "Reproduce the reference examples and report errata");
  add_output(verify, o);

  auto* exp = app.add_subcommand("export", "Export a code with its distance report as JSON");
  add_code(exp, o);
  add_ring(exp, o);
  add_output(exp, o);
  exp->callback([&] {
    if (exp->count("--output") == 0) o.output = "json";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return run(app.get_subcommands().front()->get_name(), o);
}
