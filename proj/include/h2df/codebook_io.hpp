#pragma once

#include <iosfwd>
#include <string>

#include "h2df/codebook.hpp"

// Versioned textual serialization of a codebook.
//
//   h2df-codebook v1
//   K <K> k <k> q <q> N <N> B <B> C <C>
//   <B lines of C characters '0'/'1'; line i holds matrix row i>
//
// Import validates the header, the matrix shape, and (for constructed
// parameter sets, k >= 2 and q > 0) the constant column weight n0.

namespace h2df {

void export_codebook(const H2dfCodebook& cb, std::ostream& os);
void export_codebook_file(const H2dfCodebook& cb, const std::string& path);

H2dfCodebook import_codebook(std::istream& is);
H2dfCodebook import_codebook_file(const std::string& path);

}  // namespace h2df
