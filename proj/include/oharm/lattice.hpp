#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oharm/partition.hpp"
#include "oharm/report.hpp"

namespace oharm {

/* Lattice path of a pair of horizontal strips: step i records how column i
 * of the grid meets the two strips (NE = both, HE = exactly one, SE =
 * neither). Only a finite prefix is stored; beyond it the path continues
 * with SE steps forever. */
class LatticePath {
public:
    // steps entries are +1 (NE), 0 (HE), -1 (SE)
    explicit LatticePath(std::vector<int> steps);

    int length() const { return static_cast<int>(steps_.size()); }
    // 1-based; steps past the stored prefix are SE.
    int step(int i) const;
    // y-coordinate after x steps, defined for all x >= 0.
    int height(int x) const;
    int min_height(int upto) const;  // min of height(0..upto)

    std::string str() const;  // one "x=i step=NE|HE|SE h=..." line per step

private:
    std::vector<int> steps_;
    std::vector<int> heights_;  // heights_[x] = height after x steps
};

// The path of (mu, lam1, lam2); both skews must be horizontal strips. The
// stored prefix has the requested length.
LatticePath lattice_path(const Partition& mu, const Partition& lam1,
                         const Partition& lam2, int len);

// All (i < j) with step i NE, step j SE (the implicit SE tail included) and
// start-height(i) = end-height(j). Every qualifying pair, not a matching.
std::vector<std::pair<int, int>> reflection_pairs(const LatticePath& path);

// max{M, lam1_1, lam2_1} where M is the largest right index of a reflection
// pair of the full path, 0 when there is none.
int width(const Partition& mu, const Partition& lam1, const Partition& lam2);

// H(d, lam1, lam2): all mu |- d making both skews horizontal strips.
std::vector<Partition> hori_set(int d, const Partition& lam1, const Partition& lam2);

// H+(d, lam1, lam2): members of H whose path stays weakly above the x-axis
// on the window [0, n+m-d-r]. Requires lam1_1, lam2_1 <= n+m-d-r and d <= r.
std::vector<Partition> hori_positive(int d, const Partition& lam1, const Partition& lam2,
                                     int n, int m, int r);

// H^wid(d, lam1, lam2): all mu |- r in H(r, lam1, lam2) with width exactly
// n+m-d-r.
std::vector<Partition> hori_wid(int d, const Partition& lam1, const Partition& lam2,
                                int n, int m, int r);

/* Shared parameters of one bijection instance: partitions lam1 |- n and
 * lam2 |- m, window bound r, and the inner size d, with 0 <= d <= r <=
 * min(n,m). The window is n+m-d-r. */
struct StripContext {
    Partition lam1, lam2;
    int n, m, r, d;

    int window() const { return n + m - d - r; }
};

// The bijection H(d) \ H+(d) -> H(d-1): remove the lowest cell of column
// x0, the first minimum of the windowed path. Requires d > 0.
Partition phi(const Partition& mu, const StripContext& ctx);

// The column phi removes (the first minimum of the windowed path); always
// strictly between 0 and the window for in-range contexts.
int phi_removal_column(const Partition& mu, const StripContext& ctx);

// Inverse of phi: append a cell to column x0'+1 where x0' is the last
// minimum of the windowed path of nu in H(d-1).
Partition phi_inverse(const Partition& nu, const StripContext& ctx);

// Left shadow map H+(d) -> H^wid(d): append a cell to every NE-step column
// of the windowed path that is in no windowed reflection pair.
Partition ls(const Partition& mu, const StripContext& ctx);

// Inverse of ls: remove the lowest cell of every SE-step column of the
// windowed path that descends to a new strict minimum.
Partition ls_inverse(const Partition& nu, const StripContext& ctx);

// Exhaustive bijectivity and two-sided-inverse certification of phi and ls
// over all lam1 |- n, lam2 |- m and all admissible (d, r). The pair grid is
// split across up to `jobs` worker threads; results merge deterministically.
CheckReport verify_bijections(int n, int m, int jobs = 1);

}  // namespace oharm
