//
// wrc - right ideals and right congruences of semigroups
//
// The construction language:
//
//   expr := free_monoid(STRING) | free_sgp(STRING) | free_comm(INT)
//         | free_comm_sgp(INT) | null(INT) | left_zero(INT) | table(PATH)
//         | adjoin1(expr) | adjoin0(expr) | product(expr, expr)
//         | sfp(expr, ...) | mfp(expr, ...) | rees(expr, IDEAL)
//   IDEAL := {elem, ...} | gen(elem, ...)
//
// Elements inside an ideal are written in the notation of the semigroup.
//

#ifndef WRC_DSL_HPP_
#define WRC_DSL_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "backends.hpp"
#include "cayley_table.hpp"
#include "constructions.hpp"
#include "element.hpp"
#include "semigroup.hpp"
#include "text.hpp"

namespace wrc::dsl {

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& msg)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
  };

  struct Expr {
    enum class Type { call, string, integer, elements };

    Type                     type = Type::call;
    // Constructor name for calls; "{}" or "gen" for element lists.
    std::string              name;
    std::string              text;
    std::int64_t             value = 0;
    std::vector<Expr>        args;
    std::vector<std::string> elements;
    std::size_t              line   = 1;
    std::size_t              column = 1;

    // Structural equality, ignoring positions.
    bool operator==(Expr const& that) const {
      return type == that.type && name == that.name && text == that.text
             && value == that.value && args == that.args
             && elements == that.elements;
    }
  };

  namespace detail {

    enum class Arg { string, integer, expr, ideal };

    struct Signature {
      std::vector<Arg> args;
      bool             variadic = false;
    };

    inline std::map<std::string, Signature> const& signatures() {
      static std::map<std::string, Signature> const sigs{
          {"free_monoid", {{Arg::string}}},
          {"free_sgp", {{Arg::string}}},
          {"free_comm", {{Arg::integer}}},
          {"free_comm_sgp", {{Arg::integer}}},
          {"null", {{Arg::integer}}},
          {"left_zero", {{Arg::integer}}},
          {"table", {{Arg::string}}},
          {"adjoin1", {{Arg::expr}}},
          {"adjoin0", {{Arg::expr}}},
          {"product", {{Arg::expr, Arg::expr}}},
          {"sfp", {{Arg::expr}, true}},
          {"mfp", {{Arg::expr}, true}},
          {"rees", {{Arg::expr, Arg::ideal}}},
      };
      return sigs;
    }

    class Parser {
     public:
      explicit Parser(std::string_view src) : _src(src) {}

      Expr parse() {
        auto e = expr();
        skip();
        if (_pos != _src.size()) {
          fail("unexpected '" + std::string(1, _src[_pos]) + "' after expression");
        }
        return e;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(_line, _col, msg);
      }

      [[noreturn]] void fail_at(Expr const& at, std::string const& msg) const {
        throw ParseError(at.line, at.column, msg);
      }

      void advance() {
        if (_src[_pos] == '\n') {
          ++_line;
          _col = 1;
        } else {
          ++_col;
        }
        ++_pos;
      }

      void skip() {
        while (_pos < _src.size()
               && (_src[_pos] == ' ' || _src[_pos] == '\t' || _src[_pos] == '\n'
                   || _src[_pos] == '\r')) {
          advance();
        }
      }

      bool peek(char c) {
        skip();
        return _pos < _src.size() && _src[_pos] == c;
      }

      void expect(char c) {
        if (!peek(c)) {
          fail(std::string("expected '") + c + "'"
               + (_pos < _src.size() ? ", found '" + std::string(1, _src[_pos]) + "'"
                                     : ", found end of input"));
        }
        advance();
      }

      Expr start() {
        skip();
        Expr e;
        e.line   = _line;
        e.column = _col;
        return e;
      }

      std::string identifier() {
        std::string out;
        while (_pos < _src.size()
               && (std::isalnum(static_cast<unsigned char>(_src[_pos]))
                   || _src[_pos] == '_')) {
          out += _src[_pos];
          advance();
        }
        return out;
      }

      Expr string_literal() {
        auto e = start();
        e.type = Expr::Type::string;
        expect('"');
        while (_pos < _src.size() && _src[_pos] != '"') {
          if (_src[_pos] == '\n') {
            fail("unterminated string");
          }
          e.text += _src[_pos];
          advance();
        }
        if (_pos == _src.size()) {
          fail("unterminated string");
        }
        advance();
        return e;
      }

      Expr integer() {
        auto e = start();
        e.type = Expr::Type::integer;
        std::string digits;
        while (_pos < _src.size() && std::isdigit(static_cast<unsigned char>(_src[_pos]))) {
          digits += _src[_pos];
          advance();
        }
        if (digits.empty()) {
          fail("expected an integer");
        }
        if (digits.size() > 9) {
          fail_at(e, "integer too large");
        }
        e.value = std::stoll(digits);
        return e;
      }

      // Raw element text up to a top-level ',' or the closing bracket.
      std::string element(char close) {
        skip();
        std::string out;
        int         depth = 0;
        bool        quote = false;
        while (_pos < _src.size()) {
          char c = _src[_pos];
          if (c == '"') {
            quote = !quote;
          } else if (!quote) {
            if (c == '(' || c == '[') {
              ++depth;
            } else if ((c == ')' || c == ']') && depth > 0) {
              --depth;
            } else if (depth == 0 && (c == ',' || c == close)) {
              break;
            }
          }
          out += c;
          advance();
        }
        auto t = std::string(text::trim(out));
        if (t.empty()) {
          fail("expected an element");
        }
        return t;
      }

      Expr ideal() {
        auto e = start();
        e.type = Expr::Type::elements;
        char close;
        if (peek('{')) {
          e.name = "{}";
          close  = '}';
          advance();
        } else {
          e.name = identifier();
          if (e.name != "gen") {
            fail_at(e, "expected an ideal: {elements} or gen(elements)");
          }
          expect('(');
          close = ')';
        }
        if (!peek(close)) {
          e.elements.push_back(element(close));
          while (peek(',')) {
            advance();
            e.elements.push_back(element(close));
          }
        }
        expect(close);
        if (e.elements.empty()) {
          fail_at(e, "an ideal needs at least one element");
        }
        return e;
      }

      Expr expr() {
        auto e = start();
        if (_pos == _src.size()) {
          fail("expected an expression, found end of input");
        }
        if (!std::isalpha(static_cast<unsigned char>(_src[_pos]))) {
          fail("expected a constructor name, found '" + std::string(1, _src[_pos]) + "'");
        }
        e.name    = identifier();
        auto it   = signatures().find(e.name);
        if (it == signatures().end()) {
          fail_at(e, "unknown constructor '" + e.name + "'");
        }
        auto const& sig = it->second;
        expect('(');
        std::size_t k = 0;
        while (!peek(')')) {
          if (k > 0) {
            expect(',');
          }
          if (k >= sig.args.size() && !sig.variadic) {
            fail(e.name + " takes " + std::to_string(sig.args.size())
                 + " argument" + (sig.args.size() == 1 ? "" : "s"));
          }
          auto kind = sig.args[std::min(k, sig.args.size() - 1)];
          skip();
          switch (kind) {
            case Arg::string:
              if (!peek('"')) {
                fail(e.name + ": argument " + std::to_string(k + 1)
                     + " must be a string");
              }
              e.args.push_back(string_literal());
              break;
            case Arg::integer: e.args.push_back(integer()); break;
            case Arg::expr: e.args.push_back(expr()); break;
            case Arg::ideal: e.args.push_back(ideal()); break;
          }
          ++k;
        }
        expect(')');
        if (k < sig.args.size()) {
          fail_at(e, e.name + " takes " + std::string(sig.variadic ? "at least " : "")
                         + std::to_string(sig.args.size()) + " argument"
                         + (sig.args.size() == 1 ? "" : "s") + ", found "
                         + std::to_string(k));
        }
        return e;
      }

      std::string_view _src;
      std::size_t      _pos  = 0;
      std::size_t      _line = 1;
      std::size_t      _col  = 1;
    };

  }  // namespace detail

  inline Expr parse_expression(std::string_view src) {
    return detail::Parser(src).parse();
  }

  inline std::string print(Expr const& e) {
    switch (e.type) {
      case Expr::Type::string: return "\"" + e.text + "\"";
      case Expr::Type::integer: return std::to_string(e.value);
      case Expr::Type::elements: {
        auto body = text::join(e.elements, ", ");
        return e.name == "{}" ? "{" + body + "}" : e.name + "(" + body + ")";
      }
      case Expr::Type::call: break;
    }
    std::vector<std::string> args;
    for (auto const& a : e.args) {
      args.push_back(print(a));
    }
    return e.name + "(" + text::join(args, ", ") + ")";
  }

  // Builds the semigroup described by e.  Table paths are resolved against
  // base.
  inline SemigroupPtr build(Expr const&                  e,
                            std::filesystem::path const& base = {}) {
    auto fail = [&e](std::string const& msg) -> SemigroupPtr {
      throw ParseError(e.line, e.column, msg);
    };
    auto count = [&](Expr const& a) -> std::size_t {
      if (a.value < 1) {
        throw ParseError(a.line, a.column, e.name + ": the size must be positive");
      }
      return static_cast<std::size_t>(a.value);
    };
    auto const& n = e.name;
    try {
      if (n == "free_monoid") {
        return free_monoid(e.args[0].text);
      } else if (n == "free_sgp") {
        if (e.args[0].text.empty()) {
          return fail("free_sgp: the alphabet must be nonempty");
        }
        return free_semigroup(e.args[0].text);
      } else if (n == "free_comm") {
        return free_commutative_monoid(count(e.args[0]));
      } else if (n == "free_comm_sgp") {
        return free_commutative_semigroup(count(e.args[0]));
      } else if (n == "null") {
        return null_semigroup(count(e.args[0]));
      } else if (n == "left_zero") {
        return left_zero_semigroup(count(e.args[0]));
      } else if (n == "table") {
        auto          path = base / e.args[0].text;
        std::ifstream in(path);
        if (!in) {
          return fail("table: cannot open '" + path.string() + "'");
        }
        return make_table(read_table(in), e.args[0].text);
      } else if (n == "adjoin1") {
        return adjoin_identity(build(e.args[0], base));
      } else if (n == "adjoin0") {
        return adjoin_zero(build(e.args[0], base));
      } else if (n == "product") {
        return direct_product(build(e.args[0], base), build(e.args[1], base));
      } else if (n == "sfp" || n == "mfp") {
        std::vector<SemigroupPtr> fs;
        for (auto const& a : e.args) {
          fs.push_back(build(a, base));
          if (n == "mfp" && !fs.back()->is_monoid()) {
            throw ParseError(a.line, a.column,
                             "mfp: factor " + print(a) + " lacks an identity");
          }
        }
        return n == "sfp" ? semigroup_free_product(std::move(fs))
                          : monoid_free_product(std::move(fs));
      } else if (n == "rees") {
        auto                 s = build(e.args[0], base);
        auto const&          spec = e.args[1];
        std::vector<Element> elems;
        for (auto const& t : spec.elements) {
          elems.push_back(s->parse(t));
        }
        auto ideal = spec.name == "gen" ? generated_ideal(s, std::move(elems))
                                        : ideal_from_elements(*s, std::move(elems));
        return rees_quotient(s, std::move(ideal));
      }
    } catch (ParseError const&) {
      throw;
    } catch (Error const& err) {
      return fail(err.what());
    }
    return fail("unknown constructor '" + n + "'");
  }

  inline SemigroupPtr build(std::string_view src, std::filesystem::path const& base = {}) {
    return build(parse_expression(src), base);
  }

}  // namespace wrc::dsl

#endif  // WRC_DSL_HPP_
