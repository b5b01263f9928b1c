#include "chordlab/fault_injection.hpp"

#include <atomic>

namespace chordlab::fault {

namespace {
std::atomic<int> g_active{static_cast<int>(Fault::None)};
} // namespace

Fault active() noexcept { return static_cast<Fault>(g_active.load(std::memory_order_relaxed)); }

void inject(Fault f) noexcept { g_active.store(static_cast<int>(f), std::memory_order_relaxed); }

const std::vector<Fault>& all_faults() {
    static const std::vector<Fault> faults = [] {
        std::vector<Fault> v;
        for (int i = static_cast<int>(Fault::PermExc); i <= static_cast<int>(Fault::TreeLeaves); ++i) {
            v.push_back(static_cast<Fault>(i));
        }
        return v;
    }();
    return faults;
}

std::string_view name(Fault f) {
    switch (f) {
    case Fault::None: return "none";
    case Fault::PermExc: return "perm.exc";
    case Fault::PermDrop: return "perm.drop";
    case Fault::PermFix: return "perm.fix";
    case Fault::PermCyc: return "perm.cyc";
    case Fault::PermAsc: return "perm.asc";
    case Fault::PermDes: return "perm.des";
    case Fault::PermInv: return "perm.inv";
    case Fault::PermCda: return "perm.cda";
    case Fault::PermDd: return "perm.dd";
    case Fault::SignedExc: return "signed.exc";
    case Fault::SignedFix: return "signed.fix";
    case Fault::SignedSingle: return "signed.single";
    case Fault::SignedCyc: return "signed.cyc";
    case Fault::BlockFixb: return "block.fixb";
    case Fault::BlockElblock: return "block.elblock";
    case Fault::BlockOlblock: return "block.olblock";
    case Fault::BlockEsblock: return "block.esblock";
    case Fault::BlockOsblock: return "block.osblock";
    case Fault::BlockEvenToOdd: return "block.even_to_odd";
    case Fault::PairCr: return "pair.cr";
    case Fault::PairNe: return "pair.ne";
    case Fault::PairAl: return "pair.al";
    case Fault::PairLne: return "pair.lne";
    case Fault::PairLcr: return "pair.lcr";
    case Fault::PairNal: return "pair.nal";
    case Fault::PairRne: return "pair.rne";
    case Fault::PairRcr: return "pair.rcr";
    case Fault::PairLrp: return "pair.lrp";
    case Fault::PairRrp: return "pair.rrp";
    case Fault::Trace: return "trace";
    case Fault::WordLne: return "word.lne";
    case Fault::WordLcr: return "word.lcr";
    case Fault::WordNal: return "word.nal";
    case Fault::WordRrp: return "word.rrp";
    case Fault::WordLrp: return "word.lrp";
    case Fault::WordInv: return "word.inv";
    case Fault::WordCoinv: return "word.coinv";
    case Fault::WordRank: return "word.rank";
    case Fault::WordLneAsLcr: return "word.lne_as_lcr";
    case Fault::StirlingAsc: return "stirling.asc";
    case Fault::StirlingPlat: return "stirling.plat";
    case Fault::StirlingDes: return "stirling.des";
    case Fault::TreeDeg1: return "tree.deg1";
    case Fault::TreeDeg2: return "tree.deg2";
    case Fault::TreeDeg3: return "tree.deg3";
    case Fault::TreeLeaves: return "tree.leaves";
    }
    return "unknown";
}

} // namespace chordlab::fault
