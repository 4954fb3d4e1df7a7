// cancx: homology tables, vanishing checks and cycle certificates for the
// canonical complex of a small Lie algebra.
//
// Exit codes: 0 pass, 1 verification or internal failure, 2 usage error.

#include <cancx/cli.hpp>

int main(int argc, char** argv) { return cancx::cli::run(argc, argv); }
