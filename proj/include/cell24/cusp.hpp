#pragma once

// Structure at infinity: ideal vertex cycles, the horosphere cube-tiling
// walk that finds cusp stabilizer elements, translation lattices, holonomy,
// flat-type classification, and the checks a fiber translation has to pass.

#include <array>
#include <optional>
#include <vector>

#include "cell24/algebra.hpp"
#include "cell24/cell24.hpp"
#include "cell24/encoding.hpp"
#include "cell24/enumerate.hpp"
#include "cell24/presentation.hpp"
#include "cell24/word.hpp"

namespace cell24 {

using Vec3 = std::array<long long, 3>;
using Rot3 = std::array<int, 3>;  // diagonal +-1 rotational part in cube axes

inline constexpr Rot3 kIdentityRot = {1, 1, 1};
inline int rot_det(const Rot3& r) { return r[0] * r[1] * r[2]; }
inline Vec3 rot_apply(const Rot3& r, const Vec3& v) {
  return {r[0] * v[0], r[1] * v[1], r[2] * v[2]};
}
inline Rot3 rot_mul(const Rot3& a, const Rot3& b) {
  return {a[0] * b[0], a[1] * b[1], a[2] * b[2]};
}

// A cusp stabilizer element as seen on a horosphere: diagonal rotational
// part and translation vector in cube units, together with a defining word.
// Elements with fixes_vertex == false are bookkeeping output of the block
// walk (cubes whose K-product moves the vertex).
struct AffineIso3 {
  Rot3 rot = kIdentityRot;
  Vec3 trans = {0, 0, 0};
  Word word;
  bool fixes_vertex = false;
  KElem kappa;

  bool is_translation() const { return fixes_vertex && rot == kIdentityRot; }
};

// Partition of the 24 ideal vertices into cusp cycles under v -> k_S(v) over
// all sides S containing v.  Cycles are ordered by their least vertex, each
// cycle listed ascending.
std::vector<std::vector<Vertex>> vertex_cycles(const PairingScheme& scheme);

// Walks the cube tiling of the horosphere at v.  Offsets run over the
// 2x2x2 block for unit-type vertices and the 4x4x4 block for half-type
// ones; words follow the axis-ascending staircase path.
std::vector<AffineIso3> block_search(const PairingScheme& scheme, Vertex v);

// The three reference translations: two steps (unit type) or four steps
// (half type) along each positive axis direction.
std::array<AffineIso3, 3> t_v_generators(const PairingScheme& scheme, Vertex v);

// Follows an arbitrary word letter-by-letter through the wall labels of the
// tiling at v.  Returns nothing if some letter matches no wall of the
// current cube or the end product does not fix v.
std::optional<AffineIso3> expand_in_stabilizer(const PairingScheme& scheme, Vertex v,
                                               const Word& w);

// A full-rank sublattice of Z^3 described by a triangular row basis.
struct Lattice3 {
  int rank = 0;
  std::array<Vec3, 3> basis{};  // row-echelon (staircase) form

  static Lattice3 from_generators(const std::vector<Vec3>& gens);
  bool contains(const Vec3& v) const;
  // coordinates of v in the basis; nullopt when v is outside the lattice
  std::optional<Vec3> solve(const Vec3& v) const;
};

struct HolonomyClass {
  Rot3 rot;
  AffineIso3 rep;  // one block element in the class
};

// Everything the later checks need about the stabilizer of one ideal vertex.
struct VertexStabilizer {
  Vertex vertex;
  bool half = false;
  std::array<AffineIso3, 3> tv;
  std::vector<AffineIso3> block;         // full block output
  std::vector<AffineIso3> translations;  // member translations (nonzero)
  std::vector<HolonomyClass> holonomy;   // nontrivial rotational classes
  Lattice3 lattice;                      // the full translation lattice
  bool orientable = false;               // all members have det +1
};

VertexStabilizer vertex_stabilizer(const PairingScheme& scheme, Vertex v);

// -------- flat 3-manifold classification --------

enum class FlatType { A, B, C, D, E, F, G, H, I, J };
char flat_type_letter(FlatType t);
bool flat_type_orientable(FlatType t);

struct UnrecognizedType : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact presentation of the stabilizer assembled from the affine data:
// lattice basis generators plus one generator per holonomy class.
FPresentation stabilizer_presentation(const VertexStabilizer& st);

struct FlatSignature {
  FlatType type;
  bool orientable;
  int holonomy_order;
  AbelianInvariants h1;
};

// The ten compact flat 3-manifolds in Hantzsche-Wendt/Wolf order, keyed by
// (orientability, holonomy order, H_1).
const std::array<FlatSignature, 10>& flat_signature_table();

// Classifies by signature lookup; fills *h1_out when given.  Throws
// UnrecognizedType if the signature matches no table row.
FlatType classify_flat_type(const VertexStabilizer& st, AbelianInvariants* h1_out = nullptr);

struct Cusp {
  int index = 0;  // 1-based, E_1, E_2, ...
  std::vector<Vertex> cycle;
  Vertex base;
  VertexStabilizer stab;
  FlatType type = FlatType::A;
  AbelianInvariants h1;
  bool orientable = false;
  // For orientable cusps: 0/1 per cycle vertex marking which of the two
  // double-cover components its stabilizer belongs to (base vertex = 0).
  std::vector<int> lift_parity;
};

std::vector<Cusp> analyze_cusps(const PairingScheme& scheme);

// Boundary components of the orientable double cover: an orientable cusp
// lifts to two components of the same type; a nonorientable one lifts to its
// orientation cover (G,H -> A and I,J -> B).
struct LiftInfo {
  int cusp_index;  // 1-based
  bool primed;
  FlatType type;   // always A or B for census codes passing the criteria
  std::string name() const;
};

std::vector<LiftInfo> double_cover_boundary(const std::vector<Cusp>& cusps);

// Holonomy classes visible in a lift: all of them when the cusp is
// orientable (the lift has the same holonomy), only the det +1 part
// otherwise (the lift is the orientation cover).
std::vector<HolonomyClass> lift_holonomy(const VertexStabilizer& st, bool cusp_orientable);

// <t> is normal in the lift iff every holonomy element maps t to +-t.
bool is_normal_translation(const AffineIso3& t, const std::vector<HolonomyClass>& hol);

// t is primitive iff it is not a proper power: not an integer multiple of a
// lattice vector, and not s^2 for a slide s (t = tau + R tau modulo the
// R-symmetrized lattice, for any holonomy class R).
bool is_primitive_in_lift(const AffineIso3& t, const VertexStabilizer& st,
                          bool cusp_orientable);

// -------- self-conjugacy diagnostic --------

enum class Tri { yes, no, unknown };

struct ProverOptions {
  long long max_cosets = 20000;    // for the finite-quotient attempt
  size_t max_states = 60000;       // breadth-first relator-insertion search
  size_t max_word_length = 20;
};

// Bounded decision of w = 1 in the presented group: abelianization
// refutation, full coset enumeration when it completes, then a bounded
// breadth-first search over relator insertions on the Tietze-simplified
// presentation.
Tri prove_trivial(const FPresentation& p, const Word& w, const ProverOptions& opt = {});

struct SelfConjugacy {
  enum class Status { witness, none, undecided };
  Status status = Status::undecided;
  Word x;            // witness conjugator
  int exponent = 1;  // x t x^-1 = t^exponent
};

// Searches the candidates for an x with [x t x^-1] = [t^{+-1}] in the
// quotient.  `none` means every candidate/sign pair was refuted; `undecided`
// means some pair hit the prover limits.
SelfConjugacy check_self_conjugate(const Word& t, const FPresentation& quotient,
                                   const std::vector<Word>& candidates,
                                   const ProverOptions& opt = {});

}  // namespace cell24
