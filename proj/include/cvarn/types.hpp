#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace cvarn {

using Real = double;
using Complex = std::complex<double>;
using Eigen::Index;

template <typename Scalar>
using VectorX = Eigen::Vector<Scalar, Eigen::Dynamic>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_finite(Real x) { return std::isfinite(x); }
inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Thrown when the Arnoldi process encounters a (near-)zero subdiagonal
/// entry, i.e. the Krylov subspace stopped growing at the given step.
class BreakdownError : public std::runtime_error {
public:
  BreakdownError(int step_, const std::string& what)
      : std::runtime_error(what), step(step_) {}
  int step;
};

/// Sample nodes x_1..x_m (the diagonal of the node operator), real or
/// complex. Also used for evaluation nodes s_1..s_M.
template <typename Scalar>
class NodeSet {
public:
  NodeSet() = default;

  explicit NodeSet(VectorX<Scalar> nodes, std::string label = {})
      : nodes_(std::move(nodes)), label_(std::move(label)) {
    if (nodes_.size() < 1)
      throw std::invalid_argument("NodeSet: at least one node required");
    for (Index j = 0; j < nodes_.size(); ++j)
      if (!is_finite(nodes_[j]))
        throw std::invalid_argument("NodeSet: nodes must be finite");
  }

  NodeSet(std::initializer_list<Scalar> nodes)
      : NodeSet(Eigen::Map<const VectorX<Scalar>>(nodes.begin(),
                                                  static_cast<Index>(nodes.size()))
                    .eval()) {}

  Index size() const { return nodes_.size(); }
  Scalar operator[](Index j) const { return nodes_[j]; }
  const VectorX<Scalar>& values() const { return nodes_; }
  const std::string& label() const { return label_; }

  bool has_duplicates() const {
    for (Index i = 0; i < nodes_.size(); ++i)
      for (Index j = i + 1; j < nodes_.size(); ++j)
        if (nodes_[i] == nodes_[j]) return true;
    return false;
  }

private:
  VectorX<Scalar> nodes_;
  std::string label_;
};

using NodeSetd = NodeSet<Real>;
using NodeSetcd = NodeSet<Complex>;

}  // namespace cvarn
