#ifndef LOCGAL_GALOIS_HPP
#define LOCGAL_GALOIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "locgal/gset.hpp"
#include "locgal/report.hpp"
#include "locgal/site_category.hpp"

namespace locgal {

/// Torsor evidence for a connected object: the canonical map
/// A x Aut(A) -> A x A, (p, h) |-> (p, h(p)), and the section a* at a chosen
/// base point. Both bijectivity verdicts are recorded and must agree.
struct GaloisCertificate {
  bool galois = false;
  std::string refutation;  // names the failing condition when !galois

  std::size_t object_size = 0;
  std::size_t aut_order = 0;
  bool connected = false;
  bool torsor_bijective = false;  // h |-> h(p) bijective at every p
  uint16_t base_point = 0;
  std::vector<uint16_t> astar;  // h |-> h(base_point)
  bool astar_bijective = false;
  std::vector<std::vector<uint16_t>> aut_maps;
};

GaloisCertificate is_galois(const GSet& x);

/// Galois closure of a connected object by the cotensor construction: the
/// orbit A of the distinguished tuple (x)_{x in FX} inside the product
/// prod_{FX} X with diagonal action, together with the projections
/// pi_x: A -> X satisfying F(pi_x)(a) = x.
struct ClosureResult {
  GSet closure;
  uint16_t base_point = 0;
  std::vector<std::vector<uint16_t>> projections;  // indexed by x in FX
  GaloisCertificate certificate;
};

ClosureResult galois_closure(const GSet& x);

/// Whether X becomes constant on each component of the cover U: every orbit
/// stabilizer of U acts trivially on X.
bool split_by(const GSet& u, const GSet& x);

/// Indices of the U-split objects of the site.
std::vector<std::size_t> split_object_ids(const SiteCategory& tbg, const GSet& u);
SiteCategory split_category(const SiteCategory& tbg, const GSet& u);

/// The representing (Galois) object of the point of Split(U): the orbit of
/// the combined base tuple in the product of all U-split transitive objects.
/// Split(U) = Split(A) holds for this A.
GSet split_closure(const SiteCategory& tbg, const GSet& u);

/// Checks Split(U) = Split(A) objectwise for A = split_closure(U), that A is
/// Galois, and that Split(A) is equivalent to tB(G/N) for N the action
/// kernel of A (fully faithful by hom counts, essentially surjective by
/// isomorphism search).
Report verify_split_eq(const SiteCategory& tbg, const GSet& u);

/// The subsite C_A: objects X with a*: [A,X] -> FX bijective; verified to
/// coincide with {X | hom(A,X) nonempty}.
struct CASubcategory {
  std::vector<std::size_t> object_ids;
  SiteCategory category;
  Report checks;
};
CASubcategory c_a_subcategory(const SiteCategory& tbg, std::size_t a_index);

/// The discrete fundamental theorem on a site whose point is representable:
/// Gamma_F must have an initial object (A, a). With G = Aut(A)^op acting on
/// the hom-sets [A, -] by precomposition, checks that every [A,X] is a
/// transitive G-set, that every arrow out of A is the categorical quotient
/// of A by its stabilizer, that the lifting muF: C -> tBG is full, faithful
/// and essentially surjective, and that every arrow into A is an
/// isomorphism.
Report verify_fundamental_discrete(const SiteCategory& c);

/// Cofinality of Galois objects: every (X, x) receives an arrow from a
/// Galois (A, a); tBG is the filtered union of the cSplit(A); minimal Galois
/// covers are listed per object.
Report galois_cofinality(const SiteCategory& tbg);

}  // namespace locgal

#endif
