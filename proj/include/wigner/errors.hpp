// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace wigner {

// Base class for all library-specific failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GridTooNarrow : public Error { public: using Error::Error; };
class GridMismatch : public Error { public: using Error::Error; };
class NonFiniteSample : public Error { public: using Error::Error; };
class NotNormalized : public Error { public: using Error::Error; };
class OverflowRisk : public Error { public: using Error::Error; };
class SupportExceeded : public Error { public: using Error::Error; };
class NotHermitian : public Error { public: using Error::Error; };
class ZeroProbability : public Error { public: using Error::Error; };
class DegenerateSeed : public Error { public: using Error::Error; };
class ZeroMass : public Error { public: using Error::Error; };
class DivergentMoments : public Error { public: using Error::Error; };
class EmptySpectrum : public Error { public: using Error::Error; };
class UnknownDemo : public Error { public: using Error::Error; };
class ConfigInvalid : public Error { public: using Error::Error; };

}  // namespace wigner
