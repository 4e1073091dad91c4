#pragma once

#include <cstddef>
#include <vector>

#include "hhb/exactla/matrix.hpp"

namespace hhb::la {

/// Execution policy for the elimination kernels. Both produce identical
/// output; the serial kernel is the reference the parallel one is tested
/// against.
enum class Exec { serial, parallel };

/// Default policy used by the rest of the library.
Exec default_exec();
void set_default_exec(Exec e);

/// Gauss-Jordan elimination in place. Pivots are chosen leftmost column
/// first, topmost remaining row first; pivot rows are normalized to 1 and
/// cleared above and below. On return the first r rows are the reduced
/// echelon basis of the row space and the remaining rows are zero. Returns
/// the pivot column of each of the first r rows.
std::vector<std::size_t> rref_inplace(Mat& m, Exec exec);
std::vector<std::size_t> rref_inplace(Mat& m);

/// Forward elimination only; returns the rank. Destroys m.
std::size_t rank_inplace(Mat& m, Exec exec);
std::size_t rank_inplace(Mat& m);

}  // namespace hhb::la
