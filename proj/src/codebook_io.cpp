#include "h2df/codebook_io.hpp"

#include <fstream>
#include <sstream>

namespace h2df {

void export_codebook(const H2dfCodebook& cb, std::ostream& os) {
  const CodeParams& p = cb.params();
  os << "h2df-codebook v1\n";
  os << "K " << p.K << " k " << p.k << " q " << p.q << " N " << p.N << " B "
     << p.B << " C " << p.C << "\n";
  for (uint32_t row = 0; row < p.B; ++row) {
    std::string line(static_cast<size_t>(p.C), '0');
    for (uint64_t j = 0; j < p.C; ++j) {
      if (cb.column_bit(static_cast<uint32_t>(j), row)) line[j] = '1';
    }
    os << line << "\n";
  }
}

void export_codebook_file(const H2dfCodebook& cb, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path + " for writing");
  export_codebook(cb, os);
  if (!os) throw IoError("write to " + path + " failed");
}

H2dfCodebook import_codebook(std::istream& is) {
  std::string magic, version;
  is >> magic >> version;
  if (!is || magic != "h2df-codebook" || version != "v1") {
    throw IoError("not a v1 codebook file");
  }
  uint64_t K = 0, k = 0, q = 0, N = 0, B = 0, C = 0;
  std::string key;
  for (auto* slot : {&K, &k, &q, &N, &B, &C}) {
    is >> key >> *slot;
  }
  if (!is) throw IoError("malformed codebook header");
  if (K < 2 || N < 1 || B < 1 || C < K) throw IoError("implausible codebook header");

  std::vector<BinaryCodeword> cols(C, BinaryCodeword(static_cast<uint32_t>(B)));
  std::string line;
  for (uint64_t row = 0; row < B; ++row) {
    if (!(is >> line) || line.size() != C) {
      throw IoError("matrix row " + std::to_string(row) + " malformed");
    }
    for (uint64_t j = 0; j < C; ++j) {
      if (line[j] == '1') {
        cols[j].set(static_cast<uint32_t>(row), true);
      } else if (line[j] != '0') {
        throw IoError("matrix entries must be '0' or '1'");
      }
    }
  }

  uint32_t n0 = 0;
  if (k >= 2 && q > 0) {
    n0 = static_cast<uint32_t>(1 + K * (k - 1));
    if (B != uint64_t{q} * n0 || C != [&] {
          uint64_t v = 1;
          for (uint64_t i = 0; i < k; ++i) v *= q;
          return v;
        }()) {
      throw IoError("header dimensions inconsistent with K,k,q");
    }
    for (const auto& c : cols) {
      if (c.weight() != n0) throw IoError("column weight violates header");
    }
  }
  return H2dfCodebook::from_columns(static_cast<uint32_t>(K),
                                    static_cast<uint32_t>(N), std::move(cols),
                                    static_cast<uint32_t>(k),
                                    static_cast<uint32_t>(q), n0);
}

H2dfCodebook import_codebook_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path);
  return import_codebook(is);
}

}  // namespace h2df
