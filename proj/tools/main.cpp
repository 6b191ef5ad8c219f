// Command-line front end: an expression REPL / batch runner over the core
// library, with explicit fuel and grid-resolution control.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "orc/almost.hpp"
#include "orc/approximation.hpp"
#include "orc/continuity.hpp"
#include "orc/expr.hpp"
#include "orc/hyperfield.hpp"
#include "orc/oriented_real.hpp"
#include "orc/rational.hpp"
#include "orc/records.hpp"
#include "orc/topology.hpp"
#include "orc/trilean.hpp"

namespace {

struct Session {
  orc::EvalConfig config;
  std::string format = "text";
  std::map<std::string, orc::Value> env;
  std::vector<orc::OrientedReal> corpus;
};

// Splits a command tail into arguments on whitespace at bracket depth zero,
// so "sig hat(3/8) [hat(1/4), hat(1/2)]" yields two expression tokens.
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == ' ' || c == '\t')) {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return !std::isdigit(static_cast<unsigned char>(s[0]));
}

orc::Value resolve(Session& ses, const std::string& token) {
  if (is_identifier(token)) {
    auto it = ses.env.find(token);
    if (it != ses.env.end()) return it->second;
    throw orc::EvalError("unbound name: " + token);
  }
  return orc::eval(orc::parse(token), ses.config);
}

orc::OrientedReal resolve_oriented(Session& ses, const std::string& token) {
  orc::Value v = resolve(ses, token);
  if (auto* r = std::get_if<orc::OrientedReal>(&v)) return *r;
  if (auto* q = std::get_if<orc::Rational>(&v)) return orc::embed_rational(*q);
  if (auto* z = std::get_if<orc::AlmostRational>(&v)) return orc::ar_embed(*z);
  throw orc::EvalError("expected an oriented real: " + token);
}

std::vector<orc::OrientedReal> resolve_list(Session& ses,
                                            const std::string& token) {
  // A bare [..] list is command syntax, not an expression, so split it on
  // top-level commas and parse the elements individually.
  if (token.size() < 2 || token.front() != '[' || token.back() != ']')
    throw orc::EvalError("expected a [..] list: " + token);
  std::string body = token.substr(1, token.size() - 2);
  std::vector<orc::OrientedReal> out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    if (cur.find_first_not_of(" \t") == std::string::npos) return;
    out.push_back(orc::eval_oriented(orc::parse(cur), ses.config));
    cur.clear();
  };
  for (char c : body) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && c == ',') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

std::vector<orc::Rational> rational_list(const orc::Expr& e) {
  if (e.kind != orc::Expr::Kind::List)
    throw orc::EvalError("expected a [..] list of rationals");
  std::vector<orc::Rational> out;
  out.reserve(e.args.size());
  for (const orc::Expr& a : e.args) {
    if (a.kind != orc::Expr::Kind::Literal)
      throw orc::EvalError("expected a rational literal in list");
    out.push_back(a.literal);
  }
  return out;
}

std::uint64_t natural_literal(const orc::Expr& e) {
  if (e.kind != orc::Expr::Kind::Literal || e.literal.den() != 1 ||
      e.literal.num() < 0)
    throw orc::EvalError("expected a natural number literal");
  return e.literal.num().convert_to<std::uint64_t>();
}

orc::RealMapDescriptor parse_real_descriptor(const orc::Expr& e) {
  if (e.kind != orc::Expr::Kind::Call)
    throw orc::EvalError("expected a map descriptor (shift/const)");
  if (e.name == "shift" && e.args.size() == 1 &&
      e.args[0].kind == orc::Expr::Kind::Literal)
    return orc::ShiftMap{e.args[0].literal};
  if (e.name == "const" && e.args.size() == 1 &&
      e.args[0].kind == orc::Expr::Kind::Literal)
    return orc::ConstantRealMap{e.args[0].literal};
  throw orc::EvalError("unknown real map descriptor: " + e.name);
}

orc::NatMapDescriptor parse_nat_descriptor(const orc::Expr& e) {
  if (e.kind != orc::Expr::Kind::Call)
    throw orc::EvalError("expected a map descriptor (phi/constn/grid)");
  if (e.name == "phi" && e.args.size() == 1)
    return orc::ThresholdMapDesc{rational_list(e.args[0])};
  if (e.name == "constn" && e.args.size() == 1)
    return orc::ConstantNatMap{natural_literal(e.args[0])};
  if (e.name == "grid" && e.args.size() == 2)
    return orc::GridComposition{natural_literal(e.args[0]),
                                parse_real_descriptor(e.args[1])};
  throw orc::EvalError("unknown nat map descriptor: " + e.name);
}

// The built-in verification corpus: the dyadic sixteenths of (0,1].
std::vector<orc::OrientedReal> default_corpus() {
  std::vector<orc::OrientedReal> out;
  for (int i = 1; i <= 16; ++i)
    out.push_back(orc::embed_rational(orc::Rational(i, 16)));
  return out;
}

orc::CorpusPairs corpus_pairs(const std::vector<orc::OrientedReal>& values) {
  orc::CorpusPairs pairs;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      pairs.emplace_back(values[i], values[j]);
  return pairs;
}

std::uint64_t parse_index(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = std::stoull(s, &pos);
  if (pos != s.size()) throw orc::EvalError("expected a natural number: " + s);
  return v;
}

void cmd_sample(Session& ses, const std::vector<std::string>& args,
                std::ostream& out) {
  if (args.size() != 2) throw orc::EvalError("usage: sample <name> <n>");
  std::uint64_t n = parse_index(args[1]);
  orc::Value v = resolve(ses, args[0]);
  if (ses.format == "records") {
    std::uint64_t count = n + 1;
    if (auto* r = std::get_if<orc::OrientedReal>(&v))
      orc::write_record(out, *r, count);
    else if (auto* a = std::get_if<orc::AlmostNatural>(&v))
      orc::write_record(out, *a, count);
    else if (auto* z = std::get_if<orc::AlmostRational>(&v))
      orc::write_record(out, *z, count);
    else
      out << std::get<orc::Rational>(v).str() << "\n";
    return;
  }
  if (auto* r = std::get_if<orc::OrientedReal>(&v))
    out << r->at(n).str() << "\n";
  else if (auto* a = std::get_if<orc::AlmostNatural>(&v))
    out << a->at(n) << "\n";
  else if (auto* z = std::get_if<orc::AlmostRational>(&v))
    out << z->at(n).str() << "\n";
  else
    out << std::get<orc::Rational>(v).str() << "\n";
}

void cmd_cmp(Session& ses, const std::vector<std::string>& args,
             std::ostream& out) {
  if (args.size() != 2) throw orc::EvalError("usage: cmp <e1> <e2>");
  orc::OrientedReal a = resolve_oriented(ses, args[0]);
  orc::OrientedReal b = resolve_oriented(ses, args[1]);
  std::uint64_t fuel = ses.config.fuel;
  out << "lt: " << orc::lt(a, b, fuel).name()
      << "  le: " << orc::le(a, b, fuel).name()
      << "  eq: " << orc::eq_o(a, b, fuel).name() << "\n";
}

void cmd_d(Session& ses, const std::vector<std::string>& args,
           std::ostream& out) {
  if (args.size() != 3) throw orc::EvalError("usage: d <e1> <e2> <p/q>");
  orc::OrientedReal a = resolve_oriented(ses, args[0]);
  orc::OrientedReal b = resolve_oriented(ses, args[1]);
  orc::Rational q = orc::Rational::parse(args[2]);
  orc::DResult r = orc::d_check(a, b, q, ses.config.fuel);
  if (!r.verdict.is_confirmed()) {
    out << r.verdict.name() << "\n";
    return;
  }
  // Tighten the reported bound: halve q while the distance check still
  // confirms, so the witness p is informative rather than the query radius.
  orc::Rational p = q;
  for (int step = 0; step < 6; ++step) {
    orc::Rational half = p / orc::Rational(2);
    orc::DResult tighter = orc::d_check(a, b, half, ses.config.fuel);
    if (!tighter.verdict.is_confirmed()) break;
    p = half;
    r = tighter;
  }
  out << "Confirmed (witness p=" << p.str() << ")\n";
}

void run_command(Session& ses, const std::string& line, std::ostream& out) {
  std::string trimmed = line;
  while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
    trimmed.pop_back();
  std::size_t start = trimmed.find_first_not_of(" \t");
  if (start == std::string::npos) return;  // blank
  trimmed = trimmed.substr(start);
  if (trimmed[0] == '#') return;  // comment

  std::size_t sp = trimmed.find_first_of(" \t");
  std::string cmd = trimmed.substr(0, sp);
  std::string rest = sp == std::string::npos ? "" : trimmed.substr(sp + 1);

  if (cmd == "let") {
    std::size_t eq = rest.find('=');
    if (eq == std::string::npos)
      throw orc::EvalError("usage: let <name> = <expr>");
    std::string name = rest.substr(0, eq);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t'))
      name.pop_back();
    if (!is_identifier(name))
      throw orc::EvalError("let: invalid name: " + name);
    std::string body = rest.substr(eq + 1);
    ses.env.insert_or_assign(name,
                             orc::eval(orc::parse(body), ses.config));
    return;
  }

  std::vector<std::string> args = split_args(rest);

  if (cmd == "sample") {
    cmd_sample(ses, args, out);
  } else if (cmd == "cmp") {
    cmd_cmp(ses, args, out);
  } else if (cmd == "member") {
    if (args.size() != 2) throw orc::EvalError("usage: member <p/q> <e>");
    orc::Rational q = orc::Rational::parse(args[0]);
    orc::OrientedReal a = resolve_oriented(ses, args[1]);
    out << orc::psi_member(q, a, ses.config.fuel).name() << "\n";
  } else if (cmd == "d") {
    cmd_d(ses, args, out);
  } else if (cmd == "sig") {
    if (args.size() != 2) throw orc::EvalError("usage: sig <e> [<e>,..]");
    orc::OrientedReal a = resolve_oriented(ses, args[0]);
    std::vector<orc::OrientedReal> ref = resolve_list(ses, args[1]);
    out << orc::lt_signature(a, ref, ses.config.fuel).str() << "\n";
  } else if (cmd == "nbhd") {
    if (args.size() != 3)
      throw orc::EvalError("usage: nbhd <e1> <e2> [<e>,..]");
    orc::OrientedReal b = resolve_oriented(ses, args[0]);
    orc::OrientedReal a = resolve_oriented(ses, args[1]);
    std::vector<orc::OrientedReal> ref = resolve_list(ses, args[2]);
    out << orc::oriented_nbhd_member(b, a, ref, ses.config.fuel).name()
        << "\n";
  } else if (cmd == "ocp") {
    if (args.size() != 1) throw orc::EvalError("usage: ocp <descriptor>");
    orc::NatMapDescriptor phi = parse_nat_descriptor(orc::parse(args[0]));
    std::vector<orc::OrientedReal> e = orc::ocp_modulus(phi);
    out << "E = {";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ", ";
      out << "hat(" << e[i].exact_rational()->str() << ")";
    }
    out << "}\n";
  } else if (cmd == "totalc") {
    if (args.size() != 2)
      throw orc::EvalError("usage: totalc <descriptor> <n>");
    orc::RealMapDescriptor f = parse_real_descriptor(orc::parse(args[0]));
    std::uint64_t n = parse_index(args[1]);
    std::vector<orc::OrientedReal> mod = orc::totalc_modulus(f, n);
    const std::vector<orc::OrientedReal>& values =
        ses.corpus.empty() ? default_corpus() : ses.corpus;
    orc::Report rep = orc::verify_totalc(f, n, mod, corpus_pairs(values),
                                         ses.config.fuel);
    out << rep.str();
  } else if (cmd == "dump") {
    if (args.size() != 2) throw orc::EvalError("usage: dump <name> <file>");
    orc::Value v = resolve(ses, args[0]);
    std::ofstream file(args[1]);
    if (!file) throw orc::EvalError("dump: cannot open " + args[1]);
    std::uint64_t count = 32;
    if (auto* r = std::get_if<orc::OrientedReal>(&v))
      orc::write_record(file, *r, count);
    else if (auto* a = std::get_if<orc::AlmostNatural>(&v))
      orc::write_record(file, *a, count);
    else if (auto* z = std::get_if<orc::AlmostRational>(&v))
      orc::write_record(file, *z, count);
    else
      throw orc::EvalError("dump: plain rationals have no record form");
    out << "wrote " << args[1] << "\n";
  } else {
    throw orc::EvalError("unknown command: " + cmd);
  }
}

int run_stream(Session& ses, std::istream& in, std::ostream& out) {
  std::string line;
  int status = 0;
  while (std::getline(in, line)) {
    try {
      run_command(ses, line, out);
    } catch (const std::exception& ex) {
      out << "error: " << ex.what() << "\n";
      status = 1;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriented-real calculator"};

  Session ses;
  std::string corpus_path;
  std::string script_path;

  app.add_option("--fuel", ses.config.fuel, "decision fuel")
      ->envname("ORC_FUEL")
      ->default_val(1024);
  app.add_option("--grid", ses.config.grid, "probe step 2^-k")
      ->envname("ORC_GRID")
      ->default_val(7);
  app.add_option("--corpus", corpus_path,
                 "file of expressions, one per line, as verification corpus")
      ->envname("ORC_CORPUS");
  app.add_option("--format", ses.format, "output format")
      ->envname("ORC_FORMAT")
      ->check(CLI::IsMember({"text", "records"}))
      ->default_val("text");
  app.add_option("script", script_path, "batch script (default: stdin)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!corpus_path.empty()) {
      std::ifstream file(corpus_path);
      if (!file) {
        std::cerr << "error: cannot open corpus " << corpus_path << "\n";
        return 2;
      }
      std::string line;
      while (std::getline(file, line)) {
        if (line.empty() || line[0] == '#') continue;
        ses.corpus.push_back(
            orc::eval_oriented(orc::parse(line), ses.config));
      }
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: corpus: " << ex.what() << "\n";
    return 2;
  }

  if (!script_path.empty()) {
    std::ifstream file(script_path);
    if (!file) {
      std::cerr << "error: cannot open script " << script_path << "\n";
      return 2;
    }
    return run_stream(ses, file, std::cout);
  }
  return run_stream(ses, std::cin, std::cout);
}
