#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define HOPF_DEFINE_ERROR(Name)                                      \
    struct Name : Error {                                            \
        explicit Name(const std::string& msg) : Error(msg) {}        \
    }

HOPF_DEFINE_ERROR(MalformedTable);
HOPF_DEFINE_ERROR(AxiomViolation);
HOPF_DEFINE_ERROR(RingMismatch);
HOPF_DEFINE_ERROR(IndexOutOfRange);
HOPF_DEFINE_ERROR(NoConvergence);
HOPF_DEFINE_ERROR(IntegralPropertyFailure);
HOPF_DEFINE_ERROR(BasisTooLarge);
HOPF_DEFINE_ERROR(InvertibleClosureFailure);
HOPF_DEFINE_ERROR(FreenessViolation);
HOPF_DEFINE_ERROR(ClosureViolation);
HOPF_DEFINE_ERROR(NotNormal);
HOPF_DEFINE_ERROR(NotMackeyPair);
HOPF_DEFINE_ERROR(NotASubgroup);
HOPF_DEFINE_ERROR(GradingInconsistency);
HOPF_DEFINE_ERROR(OrderTooLarge);
HOPF_DEFINE_ERROR(NonIntegralFusion);
HOPF_DEFINE_ERROR(MalformedDatum);
HOPF_DEFINE_ERROR(IncompleteRepData);
HOPF_DEFINE_ERROR(UnknownFixture);
HOPF_DEFINE_ERROR(UnsupportedSubgroup);
HOPF_DEFINE_ERROR(ParseError);

#undef HOPF_DEFINE_ERROR

} // namespace hopf
