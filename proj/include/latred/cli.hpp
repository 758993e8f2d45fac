#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latred {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Runs one CLI invocation; args excludes the program name.
//   gen     --kind <uniform|planted-bdd|planted-cvp> --n --m --bits --seed [--gamma] [--slack] [--out]
//   svp     --instance <f> --oracle <spec>
//   cvp     --instance <f> --oracle <spec> [--emit-trace <path>] [--output <answer>] [--no-check]
//   bdd     --instance <f> --oracle <spec>
//   check   --instance <f> --answer <f>
//   corpus  --dir <d> [--write-expectations]
// Exit codes: 0 success, 1 bound violation / failed check, 2 usage or parse error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latred
