#pragma once

#include <array>
#include <vector>

#include "chainsim/dynamics.hpp"

namespace chainsim {

/// c_G |G> + sum_j c_j |j>, with site labels 1..S stored at index j-1.
struct PureExcitationState {
    cplx ground = 0.0;
    CVector sites;

    double norm_squared() const { return std::norm(ground) + sites.squaredNorm(); }
    ExcitationDensity density() const { return ExcitationDensity::from_pure(sites, ground); }
};

struct EntangledPair {
    PureExcitationState state;
    bool overlapping = false;  ///< d0 <= 5w: the two packets are not resolvable
};

/// (1/sqrt2) sum_j exp(i q0 j) (f_j + f_{j-d0}) |j>, renormalised to unit weight.
EntangledPair entangled_pair_state(double center, double separation, double width,
                                   double quasimomentum, int sites);

/// Two-qubit reduced state of emitters j and j' in the basis
/// {|0 0>, |1 0>, |0 1>, |1 1>}; the double-excitation row and column vanish.
struct TwoSiteReducedDensity {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    int j = 0;
    int jp = 0;

    double population_j() const { return rho(1, 1).real(); }
    double population_jp() const { return rho(2, 2).real(); }
    cplx coherence() const { return rho(1, 2); }
};

/// Site labels are 1-based. Throws PhysicsError for j == j' or labels out of range.
TwoSiteReducedDensity reduced_two_site(const PureExcitationState& state, int j, int jp);
TwoSiteReducedDensity reduced_two_site(const ExcitationDensity& rho, int j, int jp);

enum class ConcurrenceMethod { closed_form, brute_force };

/// Eigenvalues of rho (sy x sy) rho* (sy x sy), in decreasing order.
///
/// The characteristic polynomial is built by Faddeev-LeVerrier in extended
/// precision. On the single-excitation manifold its two lowest coefficients
/// vanish and the quartic reduces to a quadratic; otherwise a general
/// eigensolver is used.
/// Inputs with a negative eigenvalue below -1e-8 are rejected; smaller
/// violations are clipped first.
std::array<double, 4> wootters_eigenvalues(const TwoSiteReducedDensity& red);

double concurrence(const TwoSiteReducedDensity& red,
                   ConcurrenceMethod method = ConcurrenceMethod::closed_form);

enum class ConcurrenceNormalization { five_width, pair_count };

/// Initial packet centres used to seed the domain tracking.
struct DomainSpec {
    double first_center = 0.0;
    double second_center = 0.0;
    ConcurrenceNormalization normalization = ConcurrenceNormalization::five_width;
};

struct ConcurrenceSeries {
    std::vector<double> times;
    RVector average;           ///< C_av(t)
    RVector width;             ///< mean tracked packet width
    RVector first_center;
    RVector second_center;
};

/// Sum of pairwise concurrences between two tracked packet domains,
/// normalised by 5 w(t) (or by the number of pairs).
///
/// Each domain is a window of ceil(5 w(t)) sites centred on its packet's
/// centroid; sites claimed by both windows are dropped. Centroids are
/// re-estimated each step on either side of the midpoint between the
/// previous centroids. Throws PhysicsError if a domain becomes empty.
ConcurrenceSeries average_concurrence(const DensityTrajectory& trajectory, int sites,
                                      const DomainSpec& domains);

}  // namespace chainsim
