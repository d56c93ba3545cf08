#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace mropt {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using SpMat = Eigen::SparseMatrix<double>;

}  // namespace mropt
