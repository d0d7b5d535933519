#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string_view>

#include "hopfkit/rewrite.hpp"

namespace hopfkit
{

/// A presentation instantiated at a truncation order: compiled rules plus
/// the normal-formed images of every generator under the Hopf maps.
class Algebra
{
public:
  explicit Algebra(Presentation p, EngineConfig config = {});
  Algebra(const Algebra &) = delete;
  Algebra &operator=(const Algebra &) = delete;

  const Presentation &presentation() const noexcept { return pres_; }
  const std::string &name() const noexcept { return pres_.name; }
  const RuleSet &rules() const noexcept { return *rules_; }
  const EngineConfig &config() const noexcept { return rules_->config(); }
  Truncation truncation() const { return rules_->truncation(); }
  const NameTable &names() const noexcept { return rules_->names(); }
  int size() const noexcept { return static_cast<int>(pres_.generators.size()); }

  /// Generator or alias name to letter; throws unknown_symbol.
  Letter letter(std::string_view name) const;
  Element generator(Letter g) const;

  Value evaluate(const Expr &e) const;
  Value evaluate(std::string_view src) const;
  Element element(std::string_view src) const;
  Tensor tensor(std::string_view src, int slots = 2) const;

  Element nf(const Element &x) const { return rules_->normal_form(x); }
  Tensor nf(const Tensor &x) const { return rules_->normal_form(x); }
  Element nf_product(const Element &x, const Element &y) const;
  Tensor nf_product(const Tensor &x, const Tensor &y) const;

  bool has_hopf() const noexcept { return hopf_.has_value(); }
  const Tensor &coproduct_of(Letter g) const;
  const Scalar &counit_of(Letter g) const;
  const Element &antipode_of(Letter g) const;

  /// Multiplicative extensions, normal-formed.
  Tensor coproduct(const Word &w) const;
  Tensor coproduct(const Element &x) const;
  Scalar counit(const Word &w) const;
  Scalar counit(const Element &x) const;
  /// Anti-multiplicative: S(xy) = S(y)S(x).
  Element antipode(const Word &w) const;
  Element antipode(const Element &x) const;

  /// Delta applied to one slot, giving one more slot.
  Tensor coproduct_in_slot(const Tensor &x, int slot) const;
  /// epsilon applied to one slot of a 2-tensor.
  Element counit_in_slot(const Tensor &x, int slot) const;
  /// S applied to one slot.
  Tensor antipode_in_slot(const Tensor &x, int slot) const;
  /// m: A (x) A -> A, normal-formed.
  Element multiply_slots(const Tensor &x) const;

  std::string render(const Element &x) const { return hopfkit::render(x, names()); }
  std::string render(const Tensor &x) const { return hopfkit::render(x, names()); }

private:
  struct HopfImages
  {
    std::vector<Tensor> coproduct;
    std::vector<Scalar> counit;
    std::vector<Element> antipode;
  };

  void require_hopf() const;

  Presentation pres_;
  RuleSetPtr rules_;
  std::optional<HopfImages> hopf_;
  mutable std::mutex mutex_;
  mutable std::map<Word, Tensor, ShortLex> delta_cache_;
  mutable std::map<Word, Element, ShortLex> antipode_cache_;
};

/// Scalar value of an element that is a multiple of the unit word.
Scalar scalar_part(const Element &x, const std::string &what);

} // namespace hopfkit
