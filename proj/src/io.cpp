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

#include "rankbreak/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "rankbreak/error.hpp"
#include "rankbreak/rankcode.hpp"

namespace rankbreak::io {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::size_t parse_size(std::string_view s, const char* what) {
  std::size_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  require(res.ec == std::errc() && res.ptr == s.data() + s.size(), std::string("bad ") + what);
  return v;
}

Word parse_modulus_low(std::string_view text, int m) {
  require(text.size() > 2 && text.substr(0, 2) == "0x", "modulus must be 0x-prefixed hex");
  text.remove_prefix(2);
  require(text.size() <= 17, "modulus too long");
  unsigned __int128 full = 0;
  for (char c : text) {
    int d;
    if (c >= '0' && c <= '9') {
      d = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      d = c - 'a' + 10;
    } else {
      fail(ErrorKind::invalid_input, "bad modulus hex");
    }
    full = (full << 4) | static_cast<unsigned>(d);
  }
  require((full >> m) == 1, "modulus degree does not match m");
  return static_cast<Word>(full & ((static_cast<unsigned __int128>(1) << m) - 1));
}

std::string header_line(const char* kind, const Field& f, std::size_t n, std::size_t k) {
  return std::string("lautan-") + kind + " v1 q=2 m=" + std::to_string(f.degree()) + " n=" + std::to_string(n) +
         " k=" + std::to_string(k) + " mod=" + f.modulus_hex() + "\n";
}

const std::string& entry(const Document& doc, const std::string& label) {
  const auto it = doc.entries.find(label);
  require(it != doc.entries.end(), "missing entry '" + label + "'");
  return it->second;
}

void expect_kind(const Document& doc, std::initializer_list<const char*> kinds) {
  for (const char* k : kinds) {
    if (doc.header.kind == k) return;
  }
  fail(ErrorKind::invalid_input, "unexpected file kind '" + doc.header.kind + "'");
}

MatFqm read_ext_rows(const Document& doc, const std::string& name, std::size_t rows, std::size_t cols) {
  const Field& f = doc.header.field;
  MatFqm out(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const VecFqm r = parse_vector(entry(doc, name + "[" + std::to_string(i) + "]"), f);
    require(r.size() == cols, name + " row has wrong length");
    out.set_row(i, r);
  }
  return out;
}

void write_ext_rows(std::ostringstream& os, const std::string& name, const MatFqm& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) os << name << "[" << i << "]: " << format_vector(m.row(i)) << "\n";
}

void write_private_body(std::ostringstream& os, const PrivateKey& sk) {
  os << "g: " << format_vector(sk.g) << "\n";
  write_ext_rows(os, "G", sk.gen);
  write_ext_rows(os, "S", sk.s);
  for (std::size_t i = 0; i < sk.t.rows(); ++i) os << "T[" << i << "]: " << sk.t.row_string(i) << "\n";
}

}  // namespace

std::string format_vector(const VecFqm& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_hex(v[i]);
  }
  return out;
}

VecFqm parse_vector(std::string_view text, const Field& field) {
  text = trim(text);
  require(!text.empty(), "empty vector");
  std::vector<Word> elems;
  for (auto tok : split(text, ',')) elems.push_back(parse_hex(trim(tok), field));
  return VecFqm(field, std::move(elems));
}

Document parse_document(std::string_view text) {
  auto lines = split(text, '\n');
  require(!lines.empty() && !trim(lines[0]).empty(), "empty file");
  const auto head = split(trim(lines[0]), ' ');
  require(head.size() == 7 && head[0].substr(0, 7) == "lautan-" && head[1] == "v1", "bad header line");
  std::map<std::string, std::string_view> kv;
  for (std::size_t i = 2; i < head.size(); ++i) {
    const auto eq = head[i].find('=');
    require(eq != std::string_view::npos, "bad header field");
    kv[std::string(head[i].substr(0, eq))] = head[i].substr(eq + 1);
  }
  require(kv.count("q") && kv["q"] == "2", "only q=2 is supported");
  require(kv.count("m") && kv.count("n") && kv.count("k") && kv.count("mod"), "header misses m, n, k or mod");
  const int m = static_cast<int>(parse_size(kv["m"], "m"));
  require(m >= Field::kMinDegree && m <= Field::kMaxDegree, "m out of range");
  Document doc{Header{std::string(head[0].substr(7)), Field::with_modulus(m, parse_modulus_low(kv["mod"], m)),
                      parse_size(kv["n"], "n"), parse_size(kv["k"], "k")},
               {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    require(colon != std::string_view::npos, "line without label");
    const std::string label(trim(line.substr(0, colon)));
    require(!doc.entries.count(label), "duplicate entry '" + label + "'");
    doc.entries[label] = std::string(trim(line.substr(colon + 1)));
  }
  return doc;
}

std::string write_public_key(const PublicKey& pk) {
  std::ostringstream os;
  os << header_line("pk", pk.field, pk.n(), pk.k);
  os << "u: " << format_vector(pk.u) << "\n";
  write_ext_rows(os, "Gpub", pk.g_pub);
  return os.str();
}

PublicKey read_public_key(std::string_view text) {
  const Document doc = parse_document(text);
  expect_kind(doc, {"pk"});
  const auto& h = doc.header;
  VecFqm u = parse_vector(entry(doc, "u"), h.field);
  require(u.size() == h.n, "u has wrong length");
  require(h.k >= 1 && h.k <= h.n, "bad k");
  return PublicKey{h.field, h.k, read_ext_rows(doc, "Gpub", h.k, h.n), std::move(u)};
}

std::string write_private_key(const PrivateKey& sk) {
  std::ostringstream os;
  os << header_line("sk", sk.g.field(), sk.n(), sk.k());
  write_private_body(os, sk);
  return os.str();
}

PrivateKey read_private_key(std::string_view text) {
  const Document doc = parse_document(text);
  expect_kind(doc, {"sk", "recovered"});
  const auto& h = doc.header;
  VecFqm g = parse_vector(entry(doc, "g"), h.field);
  require(g.size() == h.n && h.k >= 1 && h.k <= h.n, "g has wrong length");
  MatFqm gen = read_ext_rows(doc, "G", h.k, h.n);
  require(gen == moore_matrix(g, h.k), "G is not the Moore matrix of g");
  MatFqm s = read_ext_rows(doc, "S", h.k, h.k);
  std::vector<std::string> t_rows;
  for (std::size_t i = 0; i < h.n; ++i) t_rows.push_back(entry(doc, "T[" + std::to_string(i) + "]"));
  MatFq t = MatFq::from_strings(t_rows);
  require(t.cols() == h.n, "T rows have wrong length");
  return PrivateKey{std::move(s), std::move(g), std::move(gen), std::move(t)};
}

std::string write_recovered_key(const RecoveredKey& key) {
  std::ostringstream os;
  os << header_line("recovered", key.key.g.field(), key.key.n(), key.key.k());
  write_private_body(os, key.key);
  os << "nullspace_dim: " << key.diagnostics.nullspace_dim << "\n";
  os << "attempts: " << key.diagnostics.attempts << "\n";
  return os.str();
}

RecoveredKey read_recovered_key(std::string_view text) {
  const Document doc = parse_document(text);
  expect_kind(doc, {"recovered"});
  RecoveredKey out{read_private_key(text), {}};
  out.diagnostics.nullspace_dim = parse_size(entry(doc, "nullspace_dim"), "nullspace_dim");
  out.diagnostics.attempts = parse_size(entry(doc, "attempts"), "attempts");
  return out;
}

std::string write_ciphertext(const Ciphertext& ct, std::size_t k) {
  std::ostringstream os;
  os << header_line("ct", ct.c1.field(), ct.c1.size(), k);
  os << "c1: " << format_vector(ct.c1) << "\n";
  os << "c2: " << format_vector(ct.c2) << "\n";
  return os.str();
}

Ciphertext read_ciphertext(std::string_view text) {
  const Document doc = parse_document(text);
  expect_kind(doc, {"ct"});
  Ciphertext ct{parse_vector(entry(doc, "c1"), doc.header.field), parse_vector(entry(doc, "c2"), doc.header.field)};
  require(ct.c1.size() == doc.header.n && ct.c2.size() == doc.header.n, "ciphertext has wrong length");
  return ct;
}

std::string write_message(const VecFqm& msg) { return format_vector(msg) + "\n"; }

VecFqm read_message(std::string_view text, const Field& field) {
  text = trim(text);
  while (!text.empty() && text.back() == '\n') text = trim(text.substr(0, text.size() - 1));
  require(!text.empty(), "empty message");
  require(text.find('\n') == std::string_view::npos, "message must be a single line");
  return parse_vector(text, field);
}

}  // namespace rankbreak::io
