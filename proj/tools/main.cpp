#include "monicrep/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

void usage() {
    std::cout <<
        "monicrep -- exact decisions for monic and Gorenstein-projective\n"
        "representations of quivers over finite-dimensional algebras\n"
        "\n"
        "usage: monicrep COMMAND [args] [flags]\n"
        "\n"
        "commands:\n"
        "  check-monic FILE      is the target representation monic?       exit 0/1\n"
        "  check-gp FILE         Gorenstein-projective verdict             exit 0/1/3\n"
        "  coker-phi FILE        quotient by the top-vertex path images    exit 0\n"
        "  algebra-info FILE     homological classification of an algebra  exit 0\n"
        "  quiver-tensor Q1 Q2   product quiver with its relations         exit 0/1\n"
        "  suite                 bundled examples and equivalence harnesses\n"
        "\n"
        "flags: --bound N (default 8), --seed S, --budget B, --jobs J,\n"
        "       --target NAME, --out FILE, --report text|json, --timings\n"
        "\n"
        "exit codes: 0 positive, 1 negative, 2 input/precondition error,\n"
        "            3 verdict only certified up to the bound\n";
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        usage();
        return args.empty() ? 2 : 0;
    }
    monicrep::cli::CommandResult res = monicrep::cli::run_command(args);
    std::cout << res.text;
    return res.exit_code;
}
