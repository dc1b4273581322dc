#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "flagcert/canonical.hpp"
#include "flagcert/coloured_graph.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

/// A fully labelled coloured complete graph; label i is vertex i-1.
class TypeSigma {
 public:
  TypeSigma() = default;
  explicit TypeSigma(ColouredGraph graph) : graph_(std::move(graph)) {}

  const ColouredGraph& graph() const { return graph_; }
  int size() const { return graph_.order(); }

  friend bool operator==(const TypeSigma&, const TypeSigma&) = default;

 private:
  ColouredGraph graph_;
};

using FlagKey = CanonicalKey;

/// A model with an injective, colour-respecting embedding theta of its type.
class Flag {
 public:
  /// Throws StructureError if theta is not injective, out of range, or does not
  /// reproduce the type's colours.
  Flag(TypeSigma type, ColouredGraph model, std::vector<int> theta);

  const TypeSigma& type() const { return type_; }
  const ColouredGraph& model() const { return model_; }
  const std::vector<int>& theta() const { return theta_; }
  int order() const { return model_.order(); }

  /// Equal iff the flags are isomorphic by a map fixing every label.
  const FlagKey& key() const { return key_; }

 private:
  TypeSigma type_;
  ColouredGraph model_;
  std::vector<int> theta_;
  FlagKey key_;
};

using ColourVector = std::array<Colour, 3>;

/// The ten 3-vertex types, sigma_1 (all red) to sigma_10 (all green).
std::vector<TypeSigma> ten_types();

/// One flag per isomorphism class of order-l sigma-flags, with theta the
/// identity on the first |sigma| vertices, sorted by key. For |sigma| = 0 these
/// are the models. Throws SizeLimitError when more than 10 edges are free.
std::vector<Flag> enumerate_flags(const TypeSigma& sigma, int order);

/// The 4-vertex flag whose fourth vertex sends colours v to labels 1, 2, 3.
/// Throws StructureError on a colour outside the type's range or |sigma| != 3.
Flag flag_from_vector(const TypeSigma& sigma, const ColourVector& v);

/// The colours from the single unlabelled vertex of a 4-vertex flag to its labels.
ColourVector flag_vector(const Flag& f);

/// The type itself as a flag (1_sigma).
Flag identity_flag(const TypeSigma& sigma);

/// p(F, G); zero when |G| < |F|. Throws DimensionError on a type mismatch.
Rational flag_density(const Flag& f, const Flag& g);

/// p(F1, F2; G) over pairs of vertex sets meeting exactly in the labels.
/// Throws DimensionError on a type mismatch or |G| < |F1| + |F2| - |sigma|.
Rational joint_density(const Flag& f1, const Flag& f2, const Flag& g);

/// Probability that a random injection theta of tau into L, with the other
/// vertices split at random into sides of sizes |K1|-|tau| and |K2|-|tau|,
/// produces K1 on one side and K2 on the other. Requires |L| = |K1|+|K2|-|tau|
/// (DimensionError otherwise).
Rational avg_coefficient(const TypeSigma& tau, const Flag& k1, const Flag& k2, const ColouredGraph& l);

/// The full matrix avg_coefficient(tau, flags[i], flags[j], L), computed by
/// classifying each outcome through label-fixing canonical keys.
std::vector<std::vector<Rational>> avg_coefficient_matrix(const TypeSigma& tau, const std::vector<Flag>& flags,
                                                          const ColouredGraph& l);

/// q_sigma(F): probability that a random injection of the labels into the model
/// induces the type and yields a flag isomorphic to F.
Rational unlabel_coefficient(const Flag& f);

/// Number of injections of the labelled tau into L that respect colours.
std::uint64_t count_type_injections(const TypeSigma& tau, const ColouredGraph& l);

/// Checks p(F, H) = Σ_{G order m} p(F, G) p(G, H) exactly.
/// Throws DimensionError unless |F| <= m <= |H|.
bool verify_chain_rule(const Flag& f, int m, const Flag& h);

/// Same, reusing a precomputed enumerate_flags(type, m).
bool verify_chain_rule(const Flag& f, const std::vector<Flag>& order_m_flags, const Flag& h);

}  // namespace flagcert
