#pragma once

#include <complex>

namespace taucube {

using Complex = std::complex<double>;

}  // namespace taucube
