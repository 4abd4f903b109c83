#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prur/cgs.hpp"
#include "prur/ratfun.hpp"

namespace prur {

/// Dense square matrix over k(U), row-major.
class RatFunMatrix {
 public:
  RatFunMatrix() = default;
  RatFunMatrix(RingPtr param_ring, std::size_t r);
  static RatFunMatrix identity(RingPtr param_ring, std::size_t r);

  std::size_t size() const noexcept { return r_; }
  const RingPtr& ring() const noexcept { return ring_; }
  RatFun& at(std::size_t i, std::size_t j) { return a_[i * r_ + j]; }
  const RatFun& at(std::size_t i, std::size_t j) const { return a_[i * r_ + j]; }

  RatFunMatrix operator*(const RatFunMatrix& o) const;
  RatFunMatrix operator+(const RatFunMatrix& o) const;
  RatFunMatrix scaled(const RatFun& c) const;
  RatFun trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool operator==(const RatFunMatrix& o) const { return r_ == o.r_ && a_ == o.a_; }

  /// Entrywise specialization; nullopt where a denominator vanishes.
  std::optional<std::vector<std::vector<Rational>>> specialize(std::span<const Rational> point) const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t r_ = 0;
  std::vector<RatFun> a_;
};

using Coords = std::vector<RatFun>;

/// The quotient algebra k(U)[X]/<G> of a zero-dimensional branch: basis B,
/// multiplication matrices of the variables and a trace cache. Row i of a
/// multiplication matrix M_t holds the coordinates of NF(t * B[i]), so
/// coords(t * v) = coords(v) * M_t. Thread-safe.
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(const CgsBranch& branch);

  const RingPtr& ring() const noexcept { return ring_; }
  const RingPtr& param_ring() const noexcept { return params_; }
  const std::vector<MvPoly>& basis() const noexcept { return gens_; }
  const std::vector<Monomial>& monomials() const noexcept { return B_; }
  std::size_t dimension() const noexcept { return B_.size(); }

  /// Coordinates of the normal form of a parameter-free polynomial of X.
  Coords coordinates(const MvPoly& f) const;
  /// Coordinates of a monomial, through products of variable matrices.
  Coords monomial_coordinates(const Monomial& m);
  /// Multiplication matrix of a parameter-free polynomial t.
  RatFunMatrix mult_matrix(const MvPoly& t);
  const RatFunMatrix& variable_matrix(std::size_t k);

  /// coords(v) * M
  static Coords times(const Coords& v, const RatFunMatrix& M);
  /// Tr(M_v) for v given by coordinates.
  RatFun trace(const Coords& v);
  /// Tr(M_{B[l]}) for every l.
  const std::vector<RatFun>& basis_traces();

  /// Hermite form Q1[i][j] = Tr(M_{B[i] B[j]}).
  RatFunMatrix hermite_form();

  /// Power-sum traces for a separating candidate t (cached per t):
  /// Tr(M_{t^i}) for i = 0..count-1 and Tr(M_{x_k t^i}).
  struct TraceRow {
    std::vector<RatFun> powers;                 // Tr(t^i)
    std::vector<std::vector<RatFun>> by_var;    // [k][i] = Tr(x_k t^i)
  };
  const TraceRow& traces_for(const MvPoly& t, std::size_t count);

  /// Characteristic polynomial of M_t from Tr(t^i), i <= dimension.
  RPoly char_poly(const MvPoly& t);

 private:
  std::vector<Coords> power_coords(const MvPoly& t, std::size_t count);

  RingPtr ring_;
  RingPtr params_;
  std::vector<MvPoly> gens_;
  std::vector<Monomial> B_;
  std::map<Monomial, std::size_t> index_;

  std::recursive_mutex mutex_;
  std::vector<std::optional<RatFunMatrix>> var_matrices_;
  std::map<Monomial, Coords> monomial_coords_;
  std::optional<std::vector<RatFun>> tau_;
  std::map<std::string, TraceRow> trace_rows_;
};

/// Characteristic polynomial by power sums of matrix powers and Newton's
/// identities.
RPoly char_poly(const RatFunMatrix& M);
/// Same from given power sums p_1..p_r (p[0] unused).
RPoly newton_char_poly(const std::vector<RatFun>& power_sums, const RatFun& zero);

/// Partition of cs by the rank of Q: minimal_cgs of the linear forms
/// sum_j D*Q_ij z_j in fresh variables z. Returns (set, rank) pairs.
std::vector<std::pair<ConstructibleSet, std::size_t>> rank_partition(const RatFunMatrix& Q,
                                                                      const ConstructibleSet& cs);

/// Exact rank of a rational matrix by Gaussian elimination.
std::size_t rank_of(std::vector<std::vector<Rational>> m);

}  // namespace prur
