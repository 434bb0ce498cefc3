#pragma once

#include "besovlab/field.hpp"

namespace besovlab {

// Div/curl coordinates of a velocity field: d = div u and the antisymmetric
// vorticity matrix w^{ij} = d_j u^i - d_i u^j. Away from the zero mode the
// pair determines u through |k|^2 u^i = -d_i d - sum_j d_j w^{ij}; the mean
// of each component is carried separately.
struct DivCurl {
    Field div;
    AntisymField curl;
    std::vector<double> means; // component means (zero modes)
};

DivCurl divcurl_split(const VectorField& u);

// Inverts the relation above. Throws if the supplied pair is inconsistent,
// i.e. not in the range of the splitting (relative residual above tol).
VectorField divcurl_reconstruct(const DivCurl& dc, double tol = 1e-8);

} // namespace besovlab
