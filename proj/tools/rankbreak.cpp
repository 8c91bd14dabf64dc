// Copyright 2026 The rankbreak Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// rankbreak: key lifecycle, key-recovery attack, assumption measurement,
// benchmark and self-test front end.
//
// Exit codes: 0 ok, 1 other failure, 2 invalid input (including a public key
// whose attack system has only the zero solution), 3 attack assumption
// failure, 4 decoding failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rankbreak/attack.hpp"
#include "rankbreak/error.hpp"
#include "rankbreak/io.hpp"
#include "rankbreak/lautan.hpp"
#include "rankbreak/oracle.hpp"
#include "rankbreak/rng.hpp"

namespace rb = rankbreak;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitAssumption = 3;
constexpr int kExitDecoding = 4;

int exit_code(rb::ErrorKind kind) {
  switch (kind) {
    case rb::ErrorKind::invalid_input:
    case rb::ErrorKind::nullspace_trivial:
      return kExitInvalid;
    case rb::ErrorKind::assumption_violated:
    case rb::ErrorKind::not_gabidulin:
      return kExitAssumption;
    case rb::ErrorKind::decoding_failure:
      return kExitDecoding;
    default:
      return kExitOther;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  rb::require(static_cast<bool>(in), "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void dump(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  rb::require(static_cast<bool>(out), "cannot write '" + path + "'");
  out << text;
  rb::require(static_cast<bool>(out.flush()), "write to '" + path + "' failed");
}

rb::AttackOptions attack_options(const std::string& basis) {
  rb::AttackOptions opts;
  opts.basis = basis == "polynomial" ? rb::BasisKind::polynomial : rb::BasisKind::normal;
  return opts;
}

std::string fmt_ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string diagnostics_line(const rb::AttackDiagnostics& d) {
  return "nullspace_dim=" + std::to_string(d.nullspace_dim) + " attempts=" + std::to_string(d.attempts) +
         " t_assemble_ms=" + fmt_ms(d.t_assemble_ms) + " t_solve_ms=" + fmt_ms(d.t_solve_ms) +
         " t_recover_ms=" + fmt_ms(d.t_recover_ms) + " t_total_ms=" + fmt_ms(d.t_total_ms);
}

bool same_code_generator(const rb::PrivateKey& a, const rb::PrivateKey& b) { return a.s * a.gen == b.s * b.gen; }

// --- commands ---------------------------------------------------------------

struct KeygenArgs {
  int m = 0;
  std::size_t n = 0, k = 0;
  std::uint64_t seed = 1;
  std::string out_pk, out_sk;
};

int cmd_keygen(const KeygenArgs& a) {
  const auto params = rb::LauTanParams::make(a.m, a.n, a.k);
  rb::Rng rng(a.seed);
  const auto kp = rb::keygen(params, rng);
  dump(a.out_pk, rb::io::write_public_key(kp.pk));
  dump(a.out_sk, rb::io::write_private_key(kp.sk));
  return kExitOk;
}

struct EncryptArgs {
  std::string pk, in, out;
  std::uint64_t seed = 1;
};

int cmd_encrypt(const EncryptArgs& a) {
  const auto pk = rb::io::read_public_key(slurp(a.pk));
  const auto msg = rb::io::read_message(slurp(a.in), pk.field);
  rb::require(msg.size() == pk.k / 2, "message must have floor(k/2) = " + std::to_string(pk.k / 2) + " elements");
  rb::Rng rng(a.seed);
  dump(a.out, rb::io::write_ciphertext(rb::encrypt(pk, msg, rng), pk.k));
  return kExitOk;
}

struct DecryptArgs {
  std::string sk, pk, in, out;
};

int cmd_decrypt(const DecryptArgs& a) {
  const auto sk = rb::io::read_private_key(slurp(a.sk));
  const auto ct = rb::io::read_ciphertext(slurp(a.in));
  const auto msg = a.pk.empty() ? rb::decrypt(sk, ct) : rb::decrypt(sk, rb::io::read_public_key(slurp(a.pk)), ct);
  dump(a.out, rb::io::write_message(msg));
  return kExitOk;
}

struct AttackArgs {
  std::string pk, out, compare_sk, basis = "normal";
};

int cmd_attack(const AttackArgs& a) {
  const auto pk = rb::io::read_public_key(slurp(a.pk));
  const auto rec = rb::full_attack(pk, attack_options(a.basis));
  dump(a.out, rb::io::write_recovered_key(rec));
  std::cout << diagnostics_line(rec.diagnostics) << "\n";
  if (!a.compare_sk.empty()) {
    const auto sk = rb::io::read_private_key(slurp(a.compare_sk));
    const bool t_ok = rec.key.t == sk.t;
    const bool sg_ok = same_code_generator(rec.key, sk);
    std::cout << "compare-sk: T " << (t_ok ? "matches" : "DIFFERS") << ", S'G' " << (sg_ok ? "=" : "!=") << " SG\n";
    if (!t_ok || !sg_ok) return kExitAssumption;
  }
  return kExitOk;
}

struct CheckArgs {
  int m = 0;
  std::size_t n = 0, k = 0, trials = 0;
  std::uint64_t seed = 1;
  std::string out, basis = "normal";
};

int cmd_check_assumption(const CheckArgs& a) {
  rb::require(a.trials > 0, "--trials must be positive");
  const auto params = rb::LauTanParams::make(a.m, a.n, a.k);
  const auto opts = attack_options(a.basis);
  std::ostringstream csv;
  csv << "trial,seed,nullspace_dim\n";
  std::map<std::size_t, std::size_t> histogram;
  std::size_t exact = 0;
  for (std::size_t i = 0; i < a.trials; ++i) {
    const std::uint64_t seed = rb::derive_seed(a.seed, i);
    rb::Rng rng(seed);
    const auto kp = rb::keygen(params, rng);
    const std::size_t dim = rb::attack_nullspace_dim(kp.pk, opts);
    csv << i << "," << seed << "," << dim << "\n";
    ++histogram[dim];
    if (dim == static_cast<std::size_t>(a.m)) ++exact;
  }
  if (a.out.empty()) {
    std::cout << csv.str();
  } else {
    dump(a.out, csv.str());
  }
  std::cout << "dimension == m (" << a.m << "): " << exact << "/" << a.trials << " fraction "
            << std::setprecision(4) << static_cast<double>(exact) / static_cast<double>(a.trials) << "\n";
  for (const auto& [dim, count] : histogram) std::cout << "  dim " << dim << ": " << count << "\n";
  return kExitOk;
}

struct BenchArgs {
  std::string suite = "table1", out, basis = "normal";
  std::size_t trials = 20;
  std::uint64_t seed = 1;
};

struct BenchRow {
  int m;
  std::size_t n, k;
  double reference_s;  // published per-trial mean, 0 if none
};

int cmd_bench(const BenchArgs& a) {
  std::vector<BenchRow> rows;
  if (a.suite == "table1") {
    rows = {{22, 18, 9, 8.6}, {28, 22, 9, 40.7}, {35, 26, 12, 173.2}};
  } else if (a.suite == "smoke") {
    rows = {{14, 12, 5, 0}, {16, 13, 6, 0}};
  } else {
    rb::fail(rb::ErrorKind::invalid_input, "unknown suite '" + a.suite + "' (table1|smoke)");
  }
  rb::require(a.trials > 0, "--trials must be positive");
  const auto opts = attack_options(a.basis);

  std::ostringstream csv;
  csv << "seed,q,m,n,k,success,nullspace_dim,t_assemble_ms,t_solve_ms,t_recover_ms,t_total_ms\n";
  std::cout << std::left << std::setw(16) << "(q,m,n,k)" << std::setw(10) << "success" << std::setw(16)
            << "mean total (s)" << "reference (s)\n";
  bool all_ok = true;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const auto params = rb::LauTanParams::make(row.m, row.n, row.k);
    std::size_t ok = 0;
    double total_ms = 0;
    for (std::size_t i = 0; i < a.trials; ++i) {
      // Seed for trial i of row r: splitmix-derived from the base seed.
      const std::uint64_t seed = rb::derive_seed(a.seed, r * a.trials + i);
      rb::Rng rng(seed);
      const auto kp = rb::keygen(params, rng);
      rb::AttackDiagnostics d;
      bool success = false;
      try {
        const auto rec = rb::full_attack(kp.pk, opts);
        d = rec.diagnostics;
        success = rec.key.t == kp.sk.t && same_code_generator(rec.key, kp.sk);
      } catch (const rb::Error&) {
        d.nullspace_dim = rb::attack_nullspace_dim(kp.pk, opts);
      }
      ok += success;
      total_ms += d.t_total_ms;
      csv << seed << ",2," << row.m << "," << row.n << "," << row.k << "," << (success ? 1 : 0) << ","
          << d.nullspace_dim << "," << fmt_ms(d.t_assemble_ms) << "," << fmt_ms(d.t_solve_ms) << ","
          << fmt_ms(d.t_recover_ms) << "," << fmt_ms(d.t_total_ms) << "\n";
    }
    all_ok = all_ok && ok == a.trials;
    const std::string label =
        "(2," + std::to_string(row.m) + "," + std::to_string(row.n) + "," + std::to_string(row.k) + ")";
    std::cout << std::setw(16) << label << std::setw(10) << (std::to_string(ok) + "/" + std::to_string(a.trials))
              << std::setw(16) << fmt_ms(total_ms / static_cast<double>(a.trials) / 1000.0)
              << (row.reference_s > 0 ? fmt_ms(row.reference_s) : std::string("-")) << "\n";
  }
  if (a.out.empty()) {
    std::cout << csv.str();
  } else {
    dump(a.out, csv.str());
  }
  return all_ok ? kExitOk : kExitAssumption;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-metric cryptanalysis lab: Lau-Tan keys, encryption and key recovery"};
  app.require_subcommand(1);

  KeygenArgs kg;
  auto* keygen = app.add_subcommand("keygen", "Generate a Lau-Tan key pair");
  keygen->add_option("--m", kg.m, "Extension degree")->required();
  keygen->add_option("--n", kg.n, "Code length")->required();
  keygen->add_option("--k", kg.k, "Code dimension")->required();
  keygen->add_option("--seed", kg.seed, "RNG seed");
  keygen->add_option("--out-pk", kg.out_pk, "Public key file")->required();
  keygen->add_option("--out-sk", kg.out_sk, "Private key file")->required();

  EncryptArgs en;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a message file");
  encrypt->add_option("--pk", en.pk, "Public key file")->required();
  encrypt->add_option("--in", en.in, "Message file (one line of hex elements)")->required();
  encrypt->add_option("--out", en.out, "Ciphertext file")->required();
  encrypt->add_option("--seed", en.seed, "RNG seed");

  DecryptArgs de;
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  decrypt->add_option("--sk", de.sk, "Private or recovered key file")->required();
  decrypt->add_option("--pk", de.pk, "Public key file (optional consistency check)");
  decrypt->add_option("--in", de.in, "Ciphertext file")->required();
  decrypt->add_option("--out", de.out, "Message file")->required();

  AttackArgs at;
  auto* attack = app.add_subcommand("attack", "Recover an equivalent private key from a public key");
  attack->add_option("--pk", at.pk, "Public key file")->required();
  attack->add_option("--out-recovered", at.out, "Recovered key file")->required();
  attack->add_option("--compare-sk", at.compare_sk, "Check the result against this private key");
  attack->add_option("--basis", at.basis, "Basis vector for the parity-check Moore matrix")
      ->check(CLI::IsMember({"normal", "polynomial"}));

  CheckArgs ca;
  auto* check = app.add_subcommand("check-assumption", "Measure the attack system's solution-space dimension");
  check->add_option("--m", ca.m)->required();
  check->add_option("--n", ca.n)->required();
  check->add_option("--k", ca.k)->required();
  check->add_option("--trials", ca.trials)->required();
  check->add_option("--seed", ca.seed);
  check->add_option("--out", ca.out, "Per-trial CSV (stdout if omitted)");
  check->add_option("--basis", ca.basis)->check(CLI::IsMember({"normal", "polynomial"}));

  BenchArgs be;
  auto* bench = app.add_subcommand("bench", "Run the attack on fresh keys and report timings");
  bench->add_option("--suite", be.suite, "table1 | smoke")->check(CLI::IsMember({"table1", "smoke"}));
  bench->add_option("--trials", be.trials, "Trials per parameter set");
  bench->add_option("--seed", be.seed);
  bench->add_option("--out", be.out, "CSV output (stdout if omitted)");
  bench->add_option("--basis", be.basis)->check(CLI::IsMember({"normal", "polynomial"}));

  auto* selftest = app.add_subcommand("selftest", "Oracle-backed consistency checks at tiny parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*keygen) return cmd_keygen(kg);
    if (*encrypt) return cmd_encrypt(en);
    if (*decrypt) return cmd_decrypt(de);
    if (*attack) return cmd_attack(at);
    if (*check) return cmd_check_assumption(ca);
    if (*bench) return cmd_bench(be);
    if (*selftest) return rb::oracle::run_selftest(std::cout) ? kExitOk : kExitOther;
  } catch (const rb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitOther;
}
