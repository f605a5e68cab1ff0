#ifndef ROTAPLEX_VERIFY_HPP
#define ROTAPLEX_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rotaplex/tsp_tt.hpp"

namespace rotaplex {

enum class Verdict { Verified, Falsified, Skipped };
std::string to_string(Verdict v);

struct VerifyParams {
  std::size_t n = 0;  // 0: the claim's default
  std::uint64_t seed = 7;
  std::size_t samples = 100;
  std::string family;  // two-defs only: birkhoff, permutahedron or tsp
};

struct VerificationReport {
  std::string claim;
  VerifyParams params;
  Verdict verdict = Verdict::Skipped;
  std::string witness;  // set when FALSIFIED
  double timing_ms = 0;
  std::map<std::string, std::string> details;  // counts and sub-results
};

std::string tool_version();
std::string version_hash();

std::vector<std::string> known_claims();
std::size_t default_n(const std::string& claim);

// Throws std::invalid_argument for unknown claims or bad parameters.
VerificationReport verify_claim(const std::string& claim, const VerifyParams& params);

std::string report_to_json(const VerificationReport& r, int indent = 2);

// Helpers shared with tests.

// Index of the cell of c (with all faces) whose relative interior contains x.
std::optional<std::size_t> carrier_cell(const PolyhedralComplex& all_faces, const RationalVector& x);
// Face of the lattice whose relative interior contains x.
std::optional<std::size_t> carrier_face(const FaceLattice& lat, const Polyhedron& parent,
                                        const RationalVector& x);

// Simplices spanned by affinely independent vertex subsets of a polytope, of its dimension.
std::vector<Polyhedron> full_simplices(const Polyhedron& p);

// Onion-skin cells inside S^polar. Orientation "up": C ∩ S_r^polar minus relint
// S_{r+1}^polar; "down": C ∩ S_r^polar minus relint S_{r-1}^polar.
PolyhedralComplex onion_cells(const RotationContext& ctx, std::size_t n, bool down,
                              std::string* note = nullptr);

}  // namespace rotaplex

#endif
