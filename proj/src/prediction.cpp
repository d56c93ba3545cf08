#include "mropt/prediction.hpp"

#include <stdexcept>
#include <utility>

namespace mropt {

PredictionScheme::PredictionScheme(int degree, std::vector<double> interior, Mat left_rows)
    : degree_(degree), interior_(std::move(interior)), left_rows_(std::move(left_rows)) {}

PredictionScheme PredictionScheme::make(int degree) {
  switch (degree) {
    case 1:
      return PredictionScheme(1, {1.0 / 2.0}, Mat(0, 2));
    case 3: {
      Mat left(1, 4);
      left << 5.0 / 16.0, 15.0 / 16.0, -5.0 / 16.0, 1.0 / 16.0;
      return PredictionScheme(3, {9.0 / 16.0, -1.0 / 16.0}, std::move(left));
    }
    case 5: {
      Mat left(2, 6);
      left << 63.0 / 256.0, 315.0 / 256.0, -105.0 / 128.0, 63.0 / 128.0, -45.0 / 256.0,
          7.0 / 256.0,  //
          -7.0 / 256.0, 105.0 / 256.0, 105.0 / 128.0, -35.0 / 128.0, 21.0 / 256.0, -3.0 / 256.0;
      return PredictionScheme(5, {150.0 / 256.0, -25.0 / 256.0, 3.0 / 256.0}, std::move(left));
    }
    default:
      throw std::invalid_argument("PredictionScheme: degree must be 1, 3 or 5");
  }
}

}  // namespace mropt
