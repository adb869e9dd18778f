#ifndef COXSPLIT_CORPUS_HPP
#define COXSPLIT_CORPUS_HPP

#include <string>
#include <vector>

#include "coxsplit/system.hpp"

namespace coxsplit {

/// Bundled example systems: sysA, sysB, sysC, sysD, dinf, a2, b2, a3.
/// File names are "<name>.json".
std::vector<std::string> corpus_names();
const std::string& corpus_json(const std::string& name);
CoxeterSystem corpus_system(const std::string& name);

}  // namespace coxsplit

#endif
