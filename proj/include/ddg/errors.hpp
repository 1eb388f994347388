#pragma once

#include <stdexcept>
#include <string>

namespace ddg {

// Base type for every recoverable error raised by the library. Callers that
// do not care about the precise failure can catch this one type; the CLI maps
// it to exit code 2 (usage/data errors) and unexpected std::logic_error to 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define DDG_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                             \
        explicit Name(const std::string& msg) : Error(msg) {}         \
    }

// graph construction / IO
DDG_DEFINE_ERROR(NotSymmetric);
DDG_DEFINE_ERROR(NonzeroDiagonal);
DDG_DEFINE_ERROR(NonBinaryEntry);
DDG_DEFINE_ERROR(MalformedHeader);
DDG_DEFINE_ERROR(TruncatedBits);
DDG_DEFINE_ERROR(SizeOverflow);
DDG_DEFINE_ERROR(EmptySet);
DDG_DEFINE_ERROR(InvalidVertexSet);

// exact linear algebra
DDG_DEFINE_ERROR(DimensionMismatch);
DDG_DEFINE_ERROR(NotSquare);

// divisible design analysis
DDG_DEFINE_ERROR(NotRegular);
DDG_DEFINE_ERROR(MoreThanTwoValues);
DDG_DEFINE_ERROR(PartitionMismatch);
DDG_DEFINE_ERROR(NotEquitable);
DDG_DEFINE_ERROR(InconsistentMultiplicities);
DDG_DEFINE_ERROR(ImproperInput);

// constructions
DDG_DEFINE_ERROR(NotSymmetricDesign);
DDG_DEFINE_ERROR(NotVKLGraph);
DDG_DEFINE_ERROR(DisconnectedInput);
DDG_DEFINE_ERROR(ParameterMismatch);
DDG_DEFINE_ERROR(NotRegularGraphicalHadamard);
DDG_DEFINE_ERROR(WrongDiagonalSign);
DDG_DEFINE_ERROR(CrossCheckMismatch);
DDG_DEFINE_ERROR(NotSrgMuLambdaPlusOne);
DDG_DEFINE_ERROR(BadOrder);

// switching
DDG_DEFINE_ERROR(TooLarge);
DDG_DEFINE_ERROR(NotSeidel);

// connectivity
DDG_DEFINE_ERROR(AdjacentEndpoints);
DDG_DEFINE_ERROR(CompleteBase);
DDG_DEFINE_ERROR(DisconnectedBase);

#undef DDG_DEFINE_ERROR

// Always-on internal consistency check (independent of NDEBUG). A failure
// means a bug in this library, not bad input, hence logic_error.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal check failed: ") + what);
}

}  // namespace ddg
