#pragma once

#include <iosfwd>

namespace bihom {

// Exit codes: 0 overall pass (or success), 1 at least one failing verdict,
// 2 inapplicable, usage errors and every library error.
int cli_main(int argc, char** argv);
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace bihom
