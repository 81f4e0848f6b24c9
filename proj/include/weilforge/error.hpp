#ifndef WEILFORGE_ERROR_HPP
#define WEILFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace weilforge {

enum class errc {
    internal,
    rank_deficient,
    zero_constant_term,
    precision_exhausted,
    ramified_input,
    odd_degree,
    non_monic,
    not_weil,
    not_almost_ordinary,
    split_contradiction,
    non_cyclic,
    bound_exceeded,
    not_integral,
    zero_lambda,
    positivity_failed,
    not_maximal,
    degenerate_denominator,
    degenerate_power,
    unsupported,
    malformed_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::internal: return "Internal";
        case errc::rank_deficient: return "RankDeficient";
        case errc::zero_constant_term: return "ZeroConstantTerm";
        case errc::precision_exhausted: return "PrecisionExhausted";
        case errc::ramified_input: return "RamifiedInput";
        case errc::odd_degree: return "OddDegree";
        case errc::non_monic: return "NonMonic";
        case errc::not_weil: return "NotWeil";
        case errc::not_almost_ordinary: return "NotAlmostOrdinary";
        case errc::split_contradiction: return "SplitContradiction";
        case errc::non_cyclic: return "NonCyclic";
        case errc::bound_exceeded: return "BoundExceeded";
        case errc::not_integral: return "NotIntegral";
        case errc::zero_lambda: return "ZeroLambda";
        case errc::positivity_failed: return "PositivityFailed";
        case errc::not_maximal: return "NotMaximal";
        case errc::degenerate_denominator: return "DegenerateDenominator";
        case errc::degenerate_power: return "DegeneratePower";
        case errc::unsupported: return "Unsupported";
        case errc::malformed_input: return "MalformedInput";
    }
    return "Unknown";
}

class wf_error : public std::runtime_error {
  public:
    wf_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw wf_error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) raise(code, what);
}

} // namespace weilforge

#endif
