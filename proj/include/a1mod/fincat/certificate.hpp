#pragma once

#include "a1mod/fincat/comma.hpp"
#include "a1mod/fincat/fin_cat.hpp"

#include <string>
#include <vector>

namespace a1mod::fincat {

enum class Verdict {
  ContractibleByInitial,
  ContractibleByTerminal,
  ContractibleByAdjunctionZigzag,
  Empty,
  Unknown,
};

std::string verdict_name(Verdict v);

// Sufficient-condition certificate: Unknown never means "not contractible".
// A positive verdict carries a re-checkable witness: the extremal object, or
// the chain of adjunctions ending in a category with an extremal object.
struct Certificate {
  Verdict verdict = Verdict::Unknown;
  int witness_object = -1;                 // for Initial/Terminal
  std::vector<AdjunctionData> zigzag;      // for AdjunctionZigzag
  Verdict final_step = Verdict::Unknown;   // how the zigzag's last category closes
  std::string note;
};

// Verdict order: Initial, Terminal, AdjunctionZigzag, then Empty/Unknown.
// The zigzag search dismantles thin categories through at most
// max_intermediates intermediate categories, each step a checked adjunction.
Certificate contractibility_certificate(const CatPtr& c, size_t max_intermediates = 2);

// Re-validates a certificate from scratch (witness really is extremal; every
// zigzag step passes check_adjunction; the final category closes as claimed).
bool revalidate_certificate(const CatPtr& c, const Certificate& cert);

enum class SquareVerdict { Certified, RefutedByEmpty, Inconclusive };

struct CellReport {
  int a = -1, b = -1, gamma = -1;
  Certificate certificate;
};

struct SquareReport {
  SquareVerdict verdict = SquareVerdict::Inconclusive;
  std::vector<CellReport> cells;
  bool budget_exceeded = false;
  size_t cells_total = 0;
};

// Certifies contractibility of every comma cell (a, b, gamma) of the square.
// budget caps the number of cells examined; exceeding it is reported
// distinctly (budget_exceeded + Inconclusive).
SquareReport exact_square_check(const SquareData& sq, size_t budget = 4096);

}  // namespace a1mod::fincat
