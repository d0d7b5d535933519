#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopfkit/element.hpp"

namespace hopfkit
{

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

/// Abstract syntax tree of the shared expression language.
///
///   expr   := expr ('+'|'-') expr | '-' expr | expr '@' expr
///           | expr ('*'|'/') expr | atom '^' ['-'] INT | atom
///   atom   := INT | 'h' | 'eps' | 'e' | GENERATOR | FUNC '(' expr [',' INT] ')' | '(' expr ')'
///
/// Binding, tightest first: ^, * and /, @, unary -, binary + and -.
/// Products are noncommutative and must be written with '*'.
struct ExprNode
{
  enum class Kind
  {
    number,
    param_h,
    param_eps,
    generator,
    neg,
    add,
    sub,
    mul,
    div,
    pow,
    tensor,
    call,
  };

  Kind kind;
  Rational number;        // number
  std::string name;       // generator or function name
  int exponent = 0;       // pow
  std::vector<Expr> args; // operands
  int line = 1;
  int column = 1;
};

/// Generator names known to the parser.  Aliases resolve to canonical
/// names at parse time, so printed trees always use canonical names.
struct SymbolTable
{
  std::vector<std::string> generators;
  std::map<std::string, std::string> aliases;

  int index_of(std::string_view name) const;
};

/// Parses src.  line/column offsets are added to error positions so that
/// errors inside files point at the right place.
Expr parse_expr(std::string_view src, const SymbolTable &symbols, int line = 1, int column_offset = 0);

/// Prints with the minimal parentheses needed to parse back to the same tree.
std::string to_string(const Expr &e);

/// Expression trees compare by printed form.
bool same_expr(const Expr &a, const Expr &b);

/// Splits a top-level sum into signed summands: a - b + c -> {+a, -b, +c}.
std::vector<std::pair<bool, Expr>> summands(const Expr &e);
Expr rebuild_sum(const std::vector<std::pair<bool, Expr>> &terms);

using Value = std::variant<Scalar, Element, Tensor>;

struct EvalOptions
{
  Truncation truncation{};
  int degree_cap = kDefaultDegreeCap;
};

/// Evaluates into the free algebra; no normal ordering happens here.
/// divh(x, k) evaluates x with k extra orders of h so the quotient is
/// exact at the requested order.
Value evaluate(const Expr &e, const SymbolTable &symbols, const EvalOptions &opts);

Element as_element(const Value &v, Truncation t);
Tensor as_tensor(const Value &v, int slots, Truncation t);
Scalar as_scalar(const Value &v);

} // namespace hopfkit
