#pragma once

#include "skewcat/json_io.hpp"

namespace skewcat {

/* The canonical fixture files shipped under fixtures/: name -> JSON document.
 * The generator tool writes them; the golden tests re-derive them and compare
 * byte-for-byte against the committed files. */
std::vector<std::pair<std::string, Json>> fixture_documents();

// deliberately malformed files, written verbatim
std::vector<std::pair<std::string, std::string>> fixture_raw_files();

}  // namespace skewcat
