#pragma once

#include "egz/modmath.hpp"
#include "egz/recon.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace egz {

using ComponentId = std::uint32_t;
inline constexpr ComponentId kNoComponent = std::numeric_limits<ComponentId>::max();

enum class ComponentStatus : std::uint8_t { Active, Temporary, Full, Retired };

const char* to_string(ComponentStatus s);

/// One progression xi + AP(v, ell). Cells 1..held are installed in the owner
/// array while the component is temporary; an active component has all of
/// 1..ell installed.
struct Component {
  Residue v = 0;
  std::uint64_t ell = 0;
  Residue xi = 0;
  NodeId recon = 0;
  std::uint64_t held = 0;
  ComponentStatus status = ComponentStatus::Retired;
};

struct OwnerCell {
  ComponentId comp = kNoComponent;
  std::uint32_t coef = 0;

  bool empty() const { return comp == kNoComponent; }
};

struct InstrumentationCounters {
  std::uint64_t owner_reads = 0;
  std::uint64_t owner_writes = 0;
  std::uint64_t owner_clears = 0;
  std::uint64_t cells_scanned = 0;
  std::uint64_t merges = 0;
  std::uint64_t extensions = 0;
  std::uint64_t insertions = 0;
  std::uint64_t recon_nodes = 0;
  std::uint64_t recon_visits = 0;

  /// reads + writes + clears + scanned: the owner-array work bounded linearly in p.
  std::uint64_t touches() const {
    return owner_reads + owner_writes + owner_clears + cells_scanned;
  }

  /// Flat key -> value view, in a fixed order.
  std::vector<std::pair<std::string_view, std::uint64_t>> record() const;

  InstrumentationCounters& operator+=(const InstrumentationCounters& o);
};

struct Collision {
  ComponentId comp;
  std::uint64_t coef;
};

struct AuditReport {
  bool ok = true;
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Mutable solver state for one prime modulus: component pool, owner array,
/// direction index, the pending list of the current scan, and the running
/// totals X (sum of offsets) and Lambda (sum of lengths) over every active,
/// temporary or full component.
class SolverState {
 public:
  /// Clears everything and sizes the arrays for modulus p (2 <= p < 2^32).
  void reset(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  Residue shift() const { return shift_; }
  std::uint64_t total_length() const { return total_length_; }

  InstrumentationCounters& counters() { return counters_; }
  const InstrumentationCounters& counters() const { return counters_; }
  ReconForest& forest() { return forest_; }
  const ReconForest& forest() const { return forest_; }

  std::size_t component_count() const { return components_.size(); }
  const Component& component(ComponentId id) const { return components_[id]; }

  /// New temporary component; its length and offset join Lambda and X.
  ComponentId create_temporary(Residue v, std::uint64_t ell, Residue xi, NodeId recon);
  /// Replaces shape and tree of `id`, adjusting Lambda and X by the differences.
  void reshape(ComponentId id, Residue v, std::uint64_t ell, Residue xi, NodeId recon);
  void set_held(ComponentId id, std::uint64_t held);
  void set_status(ComponentId id, ComponentStatus s);
  /// Drops `id` from the counted family. Its owner cells must already be gone.
  void retire(ComponentId id);

  /// Active component with direction v, or kNoComponent.
  ComponentId active_with_direction(Residue v) const;

  /// Owner cell at residue r; counts one owner read.
  OwnerCell read_owner(Residue r);
  const OwnerCell& peek_owner(Residue r) const { return owner_[r]; }
  /// Writes (c, t) at residue r; throws InvariantViolation if occupied.
  void install_cell(Residue r, ComponentId c, std::uint64_t t);
  /// Clears the cells t*v(c) for t in 1..count.
  void clear_prefix(ComponentId c, std::uint64_t count);

  /// Reads the cell at t*v(c) for the temporary c. Empty cells go to the
  /// pending list; the owner array is not modified.
  std::optional<Collision> scan_probe(ComponentId c, std::uint64_t t);
  /// Scans coefficients first..ell(c) in increasing order, stopping at the
  /// first collision. Same effect as repeated scan_probe.
  std::optional<std::pair<std::uint64_t, Collision>> scan_from(ComponentId c,
                                                               std::uint64_t first);
  void discard_pending() { pending_.clear(); }
  std::size_t pending_size() const { return pending_.size(); }

  /// Installs the pending cells, makes held cells ordinary and activates c.
  void commit_temporary(ComponentId c);
  /// Marks the temporary c (already of length p - 1) full and writes its whole
  /// progression over the owner array, shadowing every other cell.
  void install_full(ComponentId c);
  /// Removes the active d from the family. With keep_cells its installed cells
  /// stay as the held prefix of d's record, which becomes temporary; otherwise
  /// every cell is cleared and d is retired.
  void detach_active(ComponentId d, bool keep_cells);

  /// O(p) consistency check of owner array, direction index, held cells,
  /// disjointness of the active family, and the X / Lambda totals. Once a full
  /// component is installed it must own every nonzero residue instead.
  AuditReport audit_disjointness() const;

 private:
  Residue times(std::uint64_t t, Residue v) const { return (t % p_) * v % p_; }

  struct PendingCell {
    std::uint32_t residue;
    std::uint32_t coef;
  };

  std::uint64_t p_ = 0;
  std::vector<Component> components_;
  std::vector<OwnerCell> owner_;
  std::vector<ComponentId> dir_index_;
  std::vector<PendingCell> pending_;
  Residue shift_ = 0;
  std::uint64_t total_length_ = 0;
  InstrumentationCounters counters_;
  ReconForest forest_;
};

}  // namespace egz
