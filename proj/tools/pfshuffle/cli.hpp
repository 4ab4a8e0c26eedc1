#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pfshuffle/enumerator.hpp"
#include "pfshuffle/qalg.hpp"

namespace pfshuffle::cli {

enum class Method { enumerate, formula, recursion, qt_bridge };

/// Largest a+b accepted by the enumerate method.
inline constexpr int kEnumerateMaxN = 12;
/// Largest a+b accepted by the symbolic methods and by `table`.
inline constexpr int kSymbolicMaxN = 40;

/// Parkq for the family, computed by one method. A missing r or s is summed
/// over. Throws DomainError on bad parameters or when beyond the bound.
QPoly compute_poly(const Family& family, Method method, const EnumOptions& options);

/// Entry point shared by main() and the tests. `args` excludes the program
/// name. Returns 0 on success, 1 on a verification failure, 2 on usage or
/// parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pfshuffle::cli
