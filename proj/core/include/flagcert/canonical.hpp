#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flagcert/coloured_graph.hpp"

namespace flagcert {

/// Largest order accepted by the exhaustive canonical labelling.
inline constexpr int kMaxCanonicalOrder = 10;

/// Identifies an isomorphism class. Bytes are the vertex count followed by the
/// lexicographically least row-major upper-triangle colour listing over all relabellings.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::string hex() const;
  static CanonicalKey from_hex(const std::string& hex);

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes_ <=> b.bytes_;
  }

 private:
  std::vector<std::uint8_t> bytes_;
};

struct CanonicalForm {
  CanonicalKey key;
  /// Vertex i of the canonical representative is vertex perm[i] of the input.
  std::vector<int> perm;
};

/// Throws SizeLimitError for order > kMaxCanonicalOrder.
CanonicalForm canonical_form(const ColouredGraph& g);
CanonicalKey canonical_key(const ColouredGraph& g);
bool is_isomorphic(const ColouredGraph& a, const ColouredGraph& b);

/// All colour-preserving automorphisms, as vertex permutations.
std::vector<std::vector<int>> automorphisms(const ColouredGraph& g);

/// Canonical form among relabellings that send fixed[i] to position i; the key
/// is prefixed by the order and the number of fixed vertices. Used for flags.
CanonicalForm canonical_form_fixing(const ColouredGraph& g, std::span<const int> fixed);

}  // namespace flagcert
