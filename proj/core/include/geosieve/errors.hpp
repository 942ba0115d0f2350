#ifndef GEOSIEVE_ERRORS_HPP
#define GEOSIEVE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace geosieve
{

// Every failure raised by the library carries one of these codes so that
// callers (the CLI in particular) can branch without parsing messages.
enum class error_code {
    index_out_of_range,
    duplicate_cover,
    cyclic,
    multiple_minima,
    multiple_maxima,
    not_graded,
    not_a_lattice,
    not_comparable,
    not_geometric,
    brun_violation,
    negative_entry,
    hypothesis_violated,
    not_simple,
    not_a_flat,
    too_large,
    invalid_matroid,
    invalid_instance,
    bad_params,
    no_convergence,
    parse_error,
};

std::string_view to_string(error_code) noexcept;

class geosieve_error : public std::runtime_error
{
public:
    geosieve_error(error_code code, const std::string &what);

    error_code code() const noexcept
    {
        return m_code;
    }

private:
    error_code m_code;
};

[[noreturn]] void raise(error_code code, const std::string &what);

} // namespace geosieve

#endif
