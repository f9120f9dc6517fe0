#pragma once

#include <json.hpp>

#include "pick/schur1d.hpp"
#include "pick/sweep.hpp"

namespace pick {

using Json = nlohmann::json;

// Instance file schema:
// {
//   "domain":  {"kind": "polydisk"|"ball"|"grid", "dim": d,
//               "h": <grid only>, "cells": [[[re,im],...], ...]},
//   "space":   "hardy"|"bergman",
//   "algebra": {"kind": "full"} |
//              {"kind": "generated", "generators": [ <poly>, ... ]},
//   "nodes":   [[[re,im], ...], ...],
//   "targets": [[re,im], ...]
// }
// where <poly> is a list of {"alpha": [ints], "re": r, "im": i} terms.
InterpolationInstance parseInstance(const Json& j);
InterpolationInstance loadInstance(const std::string& path);

CPolynomial parsePolynomial(const Json& j, int dim);
Point parsePoint(const Json& j);

Json toJson(const Point& p);
Json toJson(const CPolynomial& p);
Json toJson(const InterpolationInstance& inst);
Json toJson(const Verdict& v);
Json toJson(const SweepReport& r);
Json toJson(const Certificate& c);
Json toJson(const SchurChain& c);

// CSV trace of per-sample smallest eigenvalues.
std::string sweepTraceCsv(const SweepReport& r);

}  // namespace pick
