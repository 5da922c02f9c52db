// Subexponential signatures: a finite label set, a pre-order on it, and an
// upwardly closed set of unbounded labels.

#ifndef SEL_SIGNATURE_HPP_
#define SEL_SIGNATURE_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sel {

class SignatureError : public std::runtime_error {
 public:
  enum class Kind { UnknownLabel, DuplicateLabel, UpwardClosureViolation };

  SignatureError(Kind kind, std::string label, const std::string& what)
      : std::runtime_error(what), kind_(kind), label_(std::move(label)) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& label() const noexcept { return label_; }

 private:
  Kind kind_;
  std::string label_;
};

using LabelPair = std::pair<std::string, std::string>;

class Signature {
 public:
  // Reflexive-transitive closure of `base_order`; validates upward closure
  // of `unbounded`.
  static Signature close(std::vector<std::string> labels, const std::vector<std::string>& unbounded,
                         const std::vector<LabelPair>& base_order);

  // {inf, a, b}, unbounded {inf}, a <= inf, b <= inf.
  static Signature sigma2();

  bool contains(std::string_view label) const noexcept;
  bool leq(std::string_view u, std::string_view v) const;
  bool is_unbounded(std::string_view u) const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::vector<std::string> unbounded() const;
  // Closed order, reflexive pairs included, in declaration order.
  std::vector<LabelPair> order() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::size_t index_of(std::string_view label) const;

  std::vector<std::string> labels_;
  std::vector<bool> unbounded_;
  std::vector<bool> leq_;  // row-major |labels| x |labels|
};

}  // namespace sel

#endif  // SEL_SIGNATURE_HPP_
