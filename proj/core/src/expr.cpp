#include "orc/expr.hpp"

#include <algorithm>

#include "orc/approximation.hpp"
#include "orc/hyperfield.hpp"

namespace orc {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError(pos_, "end of input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
            src_[pos_] == '\r'))
      ++pos_;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void expect(char c, const char* what) {
    skip_ws();
    if (peek() != c) throw ParseError(pos_, what);
    ++pos_;
  }

  Expr parse_expr() {
    skip_ws();
    const char c = peek();
    if (c == '-' || (c >= '0' && c <= '9')) return parse_rational();
    if (c >= 'a' && c <= 'z') return parse_call();
    throw ParseError(pos_, "expression (name or rational)");
  }

  Expr parse_rational() {
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    const std::size_t digits = pos_;
    while (peek() >= '0' && peek() <= '9') ++pos_;
    if (pos_ == digits) throw ParseError(pos_, "digits");
    std::string num(src_.substr(start, pos_ - start));
    std::string den = "1";
    if (peek() == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (peek() >= '0' && peek() <= '9') ++pos_;
      if (pos_ == dstart) throw ParseError(pos_, "denominator digits");
      den = std::string(src_.substr(dstart, pos_ - dstart));
    }
    Expr e;
    e.kind = Expr::Kind::Literal;
    e.offset = start;
    if (Integer(den) == 0)
      throw ParseError(start, "nonzero denominator (zero denominator)");
    e.literal = Rational(Integer(num), Integer(den));
    return e;
  }

  Expr parse_call() {
    Expr e;
    e.kind = Expr::Kind::Call;
    e.offset = pos_;
    while ((peek() >= 'a' && peek() <= 'z') || peek() == '_') {
      e.name.push_back(src_[pos_]);
      ++pos_;
    }
    expect('(', "'('");
    skip_ws();
    if (peek() != ')') {
      while (true) {
        e.args.push_back(parse_arg());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(')', "')'");
    return e;
  }

  Expr parse_arg() {
    skip_ws();
    if (peek() == '[') return parse_list();
    return parse_expr();
  }

  Expr parse_list() {
    Expr e;
    e.kind = Expr::Kind::List;
    e.offset = pos_;
    expect('[', "'['");
    skip_ws();
    if (peek() != ']') {
      while (true) {
        e.args.push_back(parse_expr());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(']', "']'");
    return e;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

const Rational& literal_of(const Expr& e, const char* what) {
  if (e.kind != Expr::Kind::Literal)
    throw EvalError(std::string(what) + " must be a rational literal");
  return e.literal;
}

std::uint64_t natural_of(const Expr& e, const char* what) {
  const Rational& r = literal_of(e, what);
  if (r.den() != 1 || r.is_negative())
    throw EvalError(std::string(what) + " must be a natural number");
  return r.num().convert_to<std::uint64_t>();
}

std::vector<Rational> rational_list_of(const Expr& e, const char* what) {
  if (e.kind != Expr::Kind::List)
    throw EvalError(std::string(what) + " must be a [..] list of rationals");
  std::vector<Rational> out;
  out.reserve(e.args.size());
  for (const Expr& arg : e.args) out.push_back(literal_of(arg, what));
  return out;
}

void need_args(const Expr& e, std::size_t n) {
  if (e.args.size() != n)
    throw EvalError(e.name + " expects " + std::to_string(n) +
                    " argument(s), got " + std::to_string(e.args.size()));
}

OrientedReal as_oriented(const Value& v, const std::string& context) {
  if (const auto* r = std::get_if<Rational>(&v)) return embed_rational(*r);
  if (const auto* o = std::get_if<OrientedReal>(&v)) return *o;
  throw EvalError(context + ": operand is not an oriented real");
}

// Finite data extended to an infinite rule by cycling; only the set of
// visited values matters for the cut constructors that use this.
IndexRule cyclic_rule(std::vector<Rational> values) {
  return [values = std::move(values)](std::uint64_t n) {
    return values[n % values.size()];
  };
}

}  // namespace

Expr parse(std::string_view source) { return Parser(source).parse_all(); }

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return e.literal.str();
    case Expr::Kind::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i > 0) out += ",";
        out += render(e.args[i]);
      }
      return out + "]";
    }
    case Expr::Kind::Call:
    default: {
      std::string out = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i > 0) out += ",";
        out += render(e.args[i]);
      }
      return out + ")";
    }
  }
}

Value eval(const Expr& e, const EvalConfig& config) {
  if (e.kind == Expr::Kind::Literal) return e.literal;
  if (e.kind == Expr::Kind::List)
    throw EvalError("a [..] list is not a value by itself");

  const std::string& op = e.name;
  try {
    if (op == "rat") {
      need_args(e, 1);
      return literal_of(e.args[0], "rat");
    }
    if (op == "hat") {
      need_args(e, 1);
      return embed_rational(literal_of(e.args[0], "hat"));
    }
    if (op == "bseq") {
      need_args(e, 2);
      auto values = rational_list_of(e.args[0], "bseq sequence");
      if (values.empty()) throw EvalError("bseq: empty sequence");
      return cut_from_bounded_sequence(cyclic_rule(std::move(values)),
                                       literal_of(e.args[1], "bseq bound"));
    }
    if (op == "sup") {
      need_args(e, 2);
      auto values = rational_list_of(e.args[0], "sup set");
      if (values.empty()) throw EvalError("sup: empty enumeration");
      return sup_enumerated(cyclic_rule(std::move(values)),
                            literal_of(e.args[1], "sup bound"));
    }
    if (op == "inf") {
      need_args(e, 1);
      return inf_finite(rational_list_of(e.args[0], "inf set"));
    }
    if (op == "add") {
      need_args(e, 2);
      return add(as_oriented(eval(e.args[0], config), "add"),
                 as_oriented(eval(e.args[1], config), "add"));
    }
    if (op == "mulpos") {
      need_args(e, 2);
      return mul_positive(as_oriented(eval(e.args[0], config), "mulpos"),
                          as_oriented(eval(e.args[1], config), "mulpos"));
    }
    if (op == "neg") {
      need_args(e, 1);
      return neg_twosided(as_oriented(eval(e.args[0], config), "neg"));
    }
    if (op == "approx") {
      need_args(e, 2);
      return approximate(as_oriented(eval(e.args[0], config), "approx"),
                         natural_of(e.args[1], "approx resolution"));
    }
    if (op == "phi") {
      need_args(e, 2);
      return threshold_phi(rational_list_of(e.args[0], "phi thresholds"),
                           as_oriented(eval(e.args[1], config), "phi"));
    }
    if (op == "limit") {
      need_args(e, 2);
      const Expr& list = e.args[0];
      if (list.kind != Expr::Kind::List || list.args.empty())
        throw EvalError("limit: needs a nonempty [..] list of expressions");
      std::vector<OrientedReal> members;
      members.reserve(list.args.size());
      for (const Expr& arg : list.args)
        members.push_back(as_oriented(eval(arg, config), "limit"));
      const Rational bound = literal_of(e.args[1], "limit bound");
      // Finite data extended by repeating the last member.
      auto seq = [members](std::uint64_t i) {
        return members[std::min<std::size_t>(i, members.size() - 1)];
      };
      return monotone_limit(seq, bound, config.fuel);
    }
  } catch (const EvalError& err) {
    throw EvalError(std::string(err.what()) + " [in " + render(e) + "]");
  } catch (const std::invalid_argument& err) {
    throw EvalError(std::string(err.what()) + " [in " + render(e) + "]");
  }
  throw EvalError("unknown operation '" + op + "'");
}

OrientedReal eval_oriented(const Expr& e, const EvalConfig& config) {
  return as_oriented(eval(e, config), "expression");
}

}  // namespace orc
