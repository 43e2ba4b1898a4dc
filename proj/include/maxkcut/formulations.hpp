#ifndef MAXKCUT_FORMULATIONS_HPP
#define MAXKCUT_FORMULATIONS_HPP

#include <vector>

#include "maxkcut/chordal.hpp"
#include "maxkcut/graph.hpp"
#include "maxkcut/model.hpp"

namespace maxkcut {

/// Assignment of every vertex to one of k partitions.
struct Partitioning {
    std::vector<int> assignment;
    int k;
};

/// Total weight of edges whose endpoints land in different partitions.
double cut_value(const Graph& g, const Partitioning& p);

/// Index helpers shared by the builders and the integral-point constructors.
/// Pairs (u < v) are numbered row-major: (0,1),(0,2),...,(0,n-1),(1,2),...
int pair_index(int n, int u, int v);
int num_pairs(int n);

/// Binary quadratic model: n*k binaries x_v_j, one assignment equality per
/// vertex, objective sum_e w_e (1 - x_u . x_v) expanded to a constant plus
/// bilinear terms.
Model build_bqo(const Graph& g, int k);

/// Vertex-based linearization with cut indicators y_u_v: kn+m binaries and
/// n+3km constraints.
Model build_vmilo(const Graph& g, int k);

constexpr long long kDefaultUpfrontCliqueCap = 2'000'000;

/// Edge-based model over all C(n,2) same-partition indicators z_u_v with
/// 3*C(n,3) triangle constraints. With lazy_cliques unset all C(n,k+1)
/// clique constraints are added upfront (TooLargeUpfront beyond the cap);
/// otherwise they are left to the separation loop.
Model build_emilo(const Graph& g, int k, bool lazy_cliques,
                  long long upfront_cap = kDefaultUpfrontCliqueCap);

/// Reduced edge-based model: z variables only on the chordal extension's
/// edges, triangle and clique constraints only inside its maximal cliques
/// (shared triangles and (k+1)-subsets deduplicated).
struct RemiloModel {
    Model model;
    ChordalInfo chordal;
    std::vector<std::pair<int, int>> z_pairs; // variable order of the z's
};
RemiloModel build_remilo(const Graph& g, int k);

enum class MisdoVariant { I, II };

/// Semidefinite models over the same-partition matrix. Variant I uses
/// entries in {0,1} with the k*Z - ee^T block; variant II uses the
/// {-1/(k-1), 1} change of variables with the matrix itself PSD. Variables
/// cover the upper triangle including the diagonal, which is pinned to one
/// by explicit equality constraints.
Model build_misdo(const Graph& g, int k, MisdoVariant variant);

/// Integral points induced by a partitioning, in each model's variable
/// order. Every one is feasible in its model and evaluates to cut_value.
std::vector<double> bqo_point(const Graph& g, const Partitioning& p);
std::vector<double> vmilo_point(const Graph& g, const Partitioning& p);
std::vector<double> emilo_point(const Graph& g, const Partitioning& p);
std::vector<double> remilo_point(const RemiloModel& rm, const Partitioning& p);
std::vector<double> misdo_point(const Graph& g, const Partitioning& p, MisdoVariant variant);

} // namespace maxkcut

#endif
