#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace spingauge {

using cplx = std::complex<double>;
using namespace std::complex_literals;

// Exceptions thrown by the library. Names follow the operation contracts.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("DimensionMismatch: " + msg) {}
};
struct SingularTetrad : Error {
    explicit SingularTetrad(const std::string& msg) : Error("SingularTetrad: " + msg) {}
};
struct NotClosed : Error {
    explicit NotClosed(const std::string& msg) : Error("NotClosed: " + msg) {}
};
struct NonRealMoment : Error {
    explicit NonRealMoment(const std::string& msg) : Error("NonRealMoment: " + msg) {}
};
struct NotUnit : Error {
    explicit NotUnit(const std::string& msg) : Error("NotUnit: " + msg) {}
};
struct NotU1 : Error {
    explicit NotU1(const std::string& msg) : Error("NotU1: " + msg) {}
};
struct ZeroCoupling : Error {
    explicit ZeroCoupling(const std::string& msg) : Error("ZeroCoupling: " + msg) {}
};
struct SolutionInconsistent : Error {
    explicit SolutionInconsistent(const std::string& msg) : Error("SolutionInconsistent: " + msg) {}
};
struct ConjugationNotVectorial : Error {
    explicit ConjugationNotVectorial(const std::string& msg) : Error("ConjugationNotVectorial: " + msg) {}
};
struct MissingJet : Error {
    explicit MissingJet(const std::string& msg) : Error("MissingJet: " + msg) {}
};
struct NonAntihermitianGenerator : Error {
    explicit NonAntihermitianGenerator(const std::string& msg) : Error("NonAntihermitianGenerator: " + msg) {}
};
struct MissingField : Error {
    explicit MissingField(const std::string& msg) : Error("MissingField: " + msg) {}
};

// Minkowski signature (-+++), fixed for this build.
inline constexpr double eta_diag(int i) { return i == 0 ? -1.0 : 1.0; }

} // namespace spingauge
