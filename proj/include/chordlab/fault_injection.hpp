#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace chordlab::fault {

/// Statistic implementations that can be deliberately perturbed. Used by the
/// fault-injection harness to show that every statistic is guarded by at
/// least one identity check. `None` in normal operation.
enum class Fault {
    None,
    PermExc, PermDrop, PermFix, PermCyc, PermAsc, PermDes, PermInv, PermCda, PermDd,
    SignedExc, SignedFix, SignedSingle, SignedCyc,
    BlockFixb, BlockElblock, BlockOlblock, BlockEsblock, BlockOsblock, BlockEvenToOdd,
    PairCr, PairNe, PairAl, PairLne, PairLcr, PairNal, PairRne, PairRcr, PairLrp, PairRrp,
    Trace,
    WordLne, WordLcr, WordNal, WordRrp, WordLrp, WordInv, WordCoinv, WordRank,
    /// Classifies every left-nesting index as a left-crossing index.
    WordLneAsLcr,
    StirlingAsc, StirlingPlat, StirlingDes,
    TreeDeg1, TreeDeg2, TreeDeg3, TreeLeaves,
};

/// Every fault except `None`.
const std::vector<Fault>& all_faults();
std::string_view name(Fault f);

Fault active() noexcept;
void inject(Fault f) noexcept;

/// Adds one to `value` when `f` is active.
template <typename Int>
inline void bump(Fault f, Int& value) noexcept {
    if (active() == f) {
        ++value;
    }
}

/// Activates a fault for the lifetime of the guard.
class ScopedFault {
  public:
    explicit ScopedFault(Fault f) noexcept : previous_(active()) { inject(f); }
    ~ScopedFault() { inject(previous_); }
    ScopedFault(const ScopedFault&) = delete;
    ScopedFault& operator=(const ScopedFault&) = delete;

  private:
    Fault previous_;
};

} // namespace chordlab::fault
