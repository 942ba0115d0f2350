#include <geosieve/errors.hpp>

namespace geosieve
{

std::string_view to_string(error_code c) noexcept
{
    switch (c) {
        case error_code::index_out_of_range:
            return "IndexOutOfRange";
        case error_code::duplicate_cover:
            return "DuplicateCover";
        case error_code::cyclic:
            return "Cyclic";
        case error_code::multiple_minima:
            return "MultipleMinima";
        case error_code::multiple_maxima:
            return "MultipleMaxima";
        case error_code::not_graded:
            return "NotGraded";
        case error_code::not_a_lattice:
            return "NotALattice";
        case error_code::not_comparable:
            return "NotComparable";
        case error_code::not_geometric:
            return "NotGeometric";
        case error_code::brun_violation:
            return "BrunViolation";
        case error_code::negative_entry:
            return "NegativeEntry";
        case error_code::hypothesis_violated:
            return "HypothesisViolated";
        case error_code::not_simple:
            return "NotSimple";
        case error_code::not_a_flat:
            return "NotAFlat";
        case error_code::too_large:
            return "TooLarge";
        case error_code::invalid_matroid:
            return "InvalidMatroid";
        case error_code::invalid_instance:
            return "InvalidInstance";
        case error_code::bad_params:
            return "BadParams";
        case error_code::no_convergence:
            return "NoConvergence";
        case error_code::parse_error:
            return "ParseError";
    }
    return "Unknown";
}

geosieve_error::geosieve_error(error_code code, const std::string &what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), m_code(code)
{
}

void raise(error_code code, const std::string &what)
{
    throw geosieve_error(code, what);
}

} // namespace geosieve
