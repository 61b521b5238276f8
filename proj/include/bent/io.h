#pragma once

// Text formats. Every reader throws ParseError carrying the 1-based line.
//
//   truth table   "n=<n>" then 2^n bits as lowercase hex; bit i is
//                 bit (i mod 4) of digit i/4, digits left to right
//   spectrum      CSV "b,W", b decimal
//   VecFn         "n=<n> k=<k>" then 2^n hex values, one per line
//   Subspace      "n=<n> dim=<d>" then one hex basis vector per line
//   PermTable     "m=<m>" then 2^m hex values in ascending key order
//   SubfieldFn    "m=<m> k=<k>" then 2^k hex values

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "bent/boolfn.h"
#include "bent/construct.h"
#include "bent/decomp.h"
#include "bent/subspace.h"
#include "bent/vectorial.h"

namespace bent {

std::string to_hex(const BoolFn& f);
BoolFn from_hex(int n, const std::string& hex, int line = 0);

void write_truth_table(std::ostream& os, const BoolFn& f);
BoolFn read_truth_table(std::istream& is);
void write_spectrum_csv(std::ostream& os, std::span<const std::int64_t> w);
void write_vecfn(std::ostream& os, const VecFn& f);
VecFn read_vecfn(std::istream& is);
void write_subspace(std::ostream& os, const Subspace& s);
Subspace read_subspace(std::istream& is);
void write_perm(std::ostream& os, const PermTable& p);
PermTable read_perm(std::istream& is);
void write_subfield_fn(std::ostream& os, const SubfieldFn& p);
SubfieldFn read_subfield_fn(std::istream& is);

// Key:value report and scan CSV "span_basis1,span_basis2,class" (hex).
void write_report(std::ostream& os, const DecompositionReport& r);
std::string report_json(const DecompositionReport& r);
void write_scan_csv(std::ostream& os, const ScanSummary& s);

BoolFn load_truth_table(const std::filesystem::path& p);
void save_truth_table(const std::filesystem::path& p, const BoolFn& f);

}  // namespace bent
