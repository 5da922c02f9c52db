#include "sel/signature.hpp"

#include <algorithm>

namespace sel {

namespace {

[[noreturn]] void unknown_label(std::string_view label) {
  throw SignatureError(SignatureError::Kind::UnknownLabel, std::string(label),
                       "unknown label '" + std::string(label) + "'");
}

}  // namespace

std::size_t Signature::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) unknown_label(label);
  return static_cast<std::size_t>(it - labels_.begin());
}

Signature Signature::close(std::vector<std::string> labels, const std::vector<std::string>& unbounded,
                           const std::vector<LabelPair>& base_order) {
  Signature sig;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (std::find(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(i), labels[i]) !=
        labels.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw SignatureError(SignatureError::Kind::DuplicateLabel, labels[i],
                           "duplicate label '" + labels[i] + "'");
    }
  }
  sig.labels_ = std::move(labels);
  const std::size_t n = sig.labels_.size();
  sig.unbounded_.assign(n, false);
  sig.leq_.assign(n * n, false);

  for (const auto& u : unbounded) sig.unbounded_[sig.index_of(u)] = true;
  for (std::size_t i = 0; i < n; ++i) sig.leq_[i * n + i] = true;
  for (const auto& [u, v] : base_order) sig.leq_[sig.index_of(u) * n + sig.index_of(v)] = true;

  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (sig.leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (sig.leq_[k * n + j]) sig.leq_[i * n + j] = true;

  for (std::size_t i = 0; i < n; ++i) {
    if (!sig.unbounded_[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sig.leq_[i * n + j] && !sig.unbounded_[j]) {
        throw SignatureError(SignatureError::Kind::UpwardClosureViolation, sig.labels_[j],
                             "unbounded label '" + sig.labels_[i] + "' is below bounded label '" +
                                 sig.labels_[j] + "'");
      }
    }
  }
  return sig;
}

Signature Signature::sigma2() {
  return close({"inf", "a", "b"}, {"inf"}, {{"a", "inf"}, {"b", "inf"}});
}

bool Signature::contains(std::string_view label) const noexcept {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

bool Signature::leq(std::string_view u, std::string_view v) const {
  return leq_[index_of(u) * labels_.size() + index_of(v)];
}

bool Signature::is_unbounded(std::string_view u) const { return unbounded_[index_of(u)]; }

std::vector<std::string> Signature::unbounded() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (unbounded_[i]) out.push_back(labels_[i]);
  return out;
}

std::vector<LabelPair> Signature::order() const {
  std::vector<LabelPair> out;
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq_[i * n + j]) out.emplace_back(labels_[i], labels_[j]);
  return out;
}

}  // namespace sel
