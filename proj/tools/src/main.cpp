// Copyright 2026 The hdecc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdecc/encoding.hpp"
#include "hdecc/peer.hpp"
#include "hdecc/protocol.hpp"
#include "hdecc/surface.hpp"
#include "hdecc/weierstrass.hpp"

namespace {

using namespace hdecc;

struct KeyFile {
  std::string params_digest_hex;
  std::array<std::uint64_t, 4> entries{};
};

void write_key_file(const std::string& path, const KeyFile& key) {
  nlohmann::json j;
  j["version"] = 1;
  j["params_digest"] = key.params_digest_hex;
  j["entries"] = key.entries;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot write key file " + path);
  out << j.dump(2) << "\n";
}

KeyFile read_key_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open key file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::malformed, std::string("key file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("version") || !j.contains("params_digest") ||
      !j.contains("entries") || j.size() != 3) {
    throw Error(Errc::malformed, "key file must carry version/params_digest/entries");
  }
  if (j["version"] != 1) throw Error(Errc::malformed, "unsupported key version");
  KeyFile key;
  key.params_digest_hex = j["params_digest"].get<std::string>();
  auto entries = j["entries"];
  if (!entries.is_array() || entries.size() != 4) {
    throw Error(Errc::malformed, "key entries must be an array of 4 integers");
  }
  for (int i = 0; i < 4; ++i) key.entries[i] = entries[i].get<std::uint64_t>();
  return key;
}

ScalarMatrix load_key_for(const ParamsFile& params, const std::string& key_path) {
  KeyFile key = read_key_file(key_path);
  auto digest = params_digest(params);
  if (key.params_digest_hex != bytes_to_hex(digest)) {
    throw Error(Errc::digest_mismatch,
                "key file was generated for a different params file");
  }
  return ScalarMatrix{key.entries};
}

Side parse_side(const std::string& text) {
  if (text == "initiator") return Side::initiator;
  if (text == "responder") return Side::responder;
  throw Error(Errc::malformed, "side must be 'initiator' or 'responder'");
}

std::pair<std::string, std::uint16_t> parse_host_port(const std::string& text) {
  auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    throw Error(Errc::malformed, "expected HOST:PORT, got '" + text + "'");
  }
  int port = std::stoi(text.substr(colon + 1));
  if (port < 0 || port > 65535) {
    throw Error(Errc::malformed, "port out of range in '" + text + "'");
  }
  return {text.substr(0, colon), std::uint16_t(port)};
}

std::pair<double, double> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(Errc::malformed, "expected LO:HI, got '" + text + "'");
  }
  return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
}

SurfaceParams surface_from_values(std::uint64_t pv,
                                  const std::vector<std::uint64_t>& a,
                                  std::uint64_t b,
                                  const std::vector<std::uint64_t>& c) {
  Prime p(pv);
  auto fe = [&](std::uint64_t v) { return FieldElement(v, p); };
  return SurfaceParams(p, {fe(a[0]), fe(a[1]), fe(a[2]), fe(a[3])}, fe(b),
                       {fe(c[0]), fe(c[1]), fe(c[2]), fe(c[3])});
}

int run(int argc, char** argv) {
  CLI::App app{"High-dimensional-surface elliptic-curve matrix key exchange"};
  app.require_subcommand(1);

  // setup
  auto* setup = app.add_subcommand("setup", "Derive curves, walk the generator "
                                            "chain and write a params file");
  std::uint64_t prime = 0, b_coeff = 0, start_x = 0;
  std::vector<std::uint64_t> a_coeffs, c_consts, counts;
  std::string out_path;
  setup->add_option("--prime", prime, "Field modulus (decimal prime)")->required();
  setup->add_option("--a", a_coeffs, "Surface coefficients a1..a4")
      ->required()->delimiter(',')->expected(4);
  setup->add_option("--b", b_coeff, "Surface constant b")->required();
  setup->add_option("--c", c_consts, "Projection constants c1..c4")
      ->required()->delimiter(',')->expected(4);
  setup->add_option("--start-x", start_x,
                    "Scan seed for the curve-1 base point")->required();
  setup->add_option("--counts", counts, "Chain hop counts s1,s2,s3")
      ->required()->delimiter(',')->expected(3);
  setup->add_option("--out", out_path, "Output params file")->required();

  // keygen
  auto* keygen = app.add_subcommand("keygen", "Draw a private key matrix");
  std::string params_path, key_path;
  std::uint64_t seed = 0;
  keygen->add_option("--params", params_path, "Params file")->required();
  keygen->add_option("--seed", seed, "RNG seed")->required();
  keygen->add_option("--out", key_path, "Output key file")->required();

  // token
  auto* token = app.add_subcommand("token", "Compute the public token");
  std::string side_text;
  token->add_option("--params", params_path, "Params file")->required();
  token->add_option("--key", key_path, "Key file")->required();
  token->add_option("--side", side_text, "initiator|responder")->required();

  // shared
  auto* shared = app.add_subcommand("shared", "Derive the shared key matrix");
  std::string peer_token_hex;
  shared->add_option("--params", params_path, "Params file")->required();
  shared->add_option("--key", key_path, "Key file")->required();
  shared->add_option("--peer-token", peer_token_hex,
                     "Peer token, 64 hex chars")->required();
  shared->add_option("--side", side_text, "initiator|responder")->required();

  // demo
  auto* demo = app.add_subcommand("demo", "Full in-process exchange");
  std::uint64_t seed_a = 0, seed_b = 0;
  demo->add_option("--params", params_path, "Params file")->required();
  demo->add_option("--seed-a", seed_a, "Initiator seed")->required();
  demo->add_option("--seed-b", seed_b, "Responder seed")->required();

  // serve / connect
  auto* serve = app.add_subcommand("serve", "Respond to one TCP exchange");
  std::string listen_text, peer_text;
  serve->add_option("--params", params_path, "Params file")->required();
  serve->add_option("--listen", listen_text, "HOST:PORT to bind")->required();
  serve->add_option("--seed", seed, "RNG seed")->required();

  auto* connect = app.add_subcommand("connect", "Initiate one TCP exchange");
  connect->add_option("--params", params_path, "Params file")->required();
  connect->add_option("--peer", peer_text, "HOST:PORT to reach")->required();
  connect->add_option("--seed", seed, "RNG seed")->required();

  // attack
  auto* attack = app.add_subcommand(
      "attack", "Recover W from the public tokens via G^-1");
  std::string token_t_hex, token_p_hex;
  attack->add_option("--params", params_path, "Params file")->required();
  attack->add_option("--token-t", token_t_hex, "Responder token hex")->required();
  attack->add_option("--token-p", token_p_hex, "Initiator token hex")->required();

  // plot
  auto* plot = app.add_subcommand("plot", "Sample the real surface to CSV");
  double a1 = 0, a2 = 0, plot_b = 0, step = 0.1;
  std::optional<double> fix_x1, fix_x2;
  std::string range_text = "-2:2", csv_path;
  plot->add_option("--a1", a1, "Coefficient a1")->required();
  plot->add_option("--a2", a2, "Coefficient a2")->required();
  plot->add_option("--b", plot_b, "Constant b")->required();
  plot->add_option("--fix-x1", fix_x1, "Project onto the plane x1 = value");
  plot->add_option("--fix-x2", fix_x2, "Project onto the plane x2 = value");
  plot->add_option("--range", range_text, "Sweep range LO:HI");
  plot->add_option("--step", step, "Sweep step");
  plot->add_option("--out", csv_path, "Output CSV file")->required();

  // reduce
  auto* reduce = app.add_subcommand(
      "reduce", "General-to-short Weierstrass reduction");
  std::uint64_t rc1 = 0, rc2 = 0, rc3 = 0, rc4 = 0, rc6 = 0;
  reduce->add_option("--prime", prime, "Field modulus (decimal prime)")->required();
  reduce->add_option("--c1", rc1, "Coefficient c1")->required();
  reduce->add_option("--c2", rc2, "Coefficient c2")->required();
  reduce->add_option("--c3", rc3, "Coefficient c3")->required();
  reduce->add_option("--c4", rc4, "Coefficient c4")->required();
  reduce->add_option("--c6", rc6, "Coefficient c6")->required();

  CLI11_PARSE(app, argc, argv);

  if (setup->parsed()) {
    SurfaceParams sp = surface_from_values(prime, a_coeffs, b_coeff, c_consts);
    auto curves = derive_projected_curves(sp);
    CurvePoint start = lift_to_curve(curves[0], FieldElement(start_x, sp.p));
    ChainSpec spec{start, {counts[0], counts[1], counts[2]}};
    SessionParams session = make_session(sp, spec);
    ParamsFile file = make_params_file(session);
    write_params_file(out_path, file);
    std::cout << bytes_to_hex(params_digest(file)) << "\n";
    return 0;
  }

  if (keygen->parsed()) {
    ParamsFile file = read_params_file(params_path);
    SessionParams session = load_session(file);
    SeededRng rng(seed);
    ScalarMatrix key = keygen_private(session, rng);
    write_key_file(key_path,
                   KeyFile{bytes_to_hex(params_digest(file)), key.entries});
    return 0;
  }

  if (token->parsed()) {
    ParamsFile file = read_params_file(params_path);
    SessionParams session = load_session(file);
    ScalarMatrix key = load_key_for(file, key_path);
    FieldMatrix t = make_token(session, key, parse_side(side_text));
    std::cout << matrix_to_hex(t) << "\n";
    return 0;
  }

  if (shared->parsed()) {
    ParamsFile file = read_params_file(params_path);
    SessionParams session = load_session(file);
    ScalarMatrix key = load_key_for(file, key_path);
    FieldMatrix peer_token = matrix_from_hex(peer_token_hex, session.surface.p);
    FieldMatrix w =
        derive_shared(session, key, peer_token, parse_side(side_text));
    std::cout << matrix_to_hex(w) << "\n";
    return 0;
  }

  if (demo->parsed()) {
    SessionParams session = load_session(read_params_file(params_path));
    auto [initiator, responder] = run_demo(session, seed_a, seed_b);
    std::cout << initiator.shared_key_hex << "\n"
              << responder.shared_key_hex << "\n";
    return 0;
  }

  if (serve->parsed() || connect->parsed()) {
    PeerConfig cfg;
    cfg.params_path = params_path;
    cfg.seed = seed;
    if (serve->parsed()) {
      cfg.role = PeerConfig::Role::serve;
      std::tie(cfg.host, cfg.port) = parse_host_port(listen_text);
    } else {
      cfg.role = PeerConfig::Role::connect;
      std::tie(cfg.host, cfg.port) = parse_host_port(peer_text);
    }
    ExchangeReport report = run_peer(cfg);
    std::cout << report.shared_key_hex << "\n";
    return 0;
  }

  if (attack->parsed()) {
    SessionParams session = load_session(read_params_file(params_path));
    FieldMatrix t = matrix_from_hex(token_t_hex, session.surface.p);
    FieldMatrix p_token = matrix_from_hex(token_p_hex, session.surface.p);
    std::cout << matrix_to_hex(eve_recover(session, t, p_token)) << "\n";
    return 0;
  }

  if (plot->parsed()) {
    if (fix_x1 && fix_x2) {
      throw Error(Errc::malformed, "--fix-x1 and --fix-x2 are exclusive");
    }
    SamplingGrid grid;
    std::tie(grid.lo, grid.hi) = parse_range(range_text);
    grid.step = step;
    if (fix_x1) {
      grid.fix = SamplingGrid::Fix::x1;
      grid.fixed_value = *fix_x1;
    } else if (fix_x2) {
      grid.fix = SamplingGrid::Fix::x2;
      grid.fixed_value = *fix_x2;
    }
    auto rows = sample_real_curve(a1, a2, plot_b, grid);
    std::ofstream out(csv_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot write " + csv_path);
    write_samples_csv(out, rows);
    std::cerr << rows.size() << " samples\n";
    return 0;
  }

  if (reduce->parsed()) {
    Prime p(prime);
    auto fe = [&](std::uint64_t v) { return FieldElement(v, p); };
    GeneralWeierstrass gw(p, fe(rc1), fe(rc2), fe(rc3), fe(rc4), fe(rc6));
    ShortForm sf = reduce_general(gw);
    std::cout << "d4=" << to_hex16(sf.d4.value()) << "\n"
              << "d6=" << to_hex16(sf.d6.value()) << "\n"
              << "A=" << to_hex16(sf.a.value()) << "\n"
              << "B=" << to_hex16(sf.b.value()) << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return errc_exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
