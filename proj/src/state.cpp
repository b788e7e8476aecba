#include "egz/state.hpp"

#include "egz/errors.hpp"

#include <sstream>

namespace egz {

const char* to_string(ComponentStatus s) {
  switch (s) {
    case ComponentStatus::Active: return "ACTIVE";
    case ComponentStatus::Temporary: return "TEMPORARY";
    case ComponentStatus::Full: return "FULL";
    case ComponentStatus::Retired: return "RETIRED";
  }
  return "?";
}

std::vector<std::pair<std::string_view, std::uint64_t>> InstrumentationCounters::record() const {
  return {{"owner_reads", owner_reads},     {"owner_writes", owner_writes},
          {"owner_clears", owner_clears},   {"cells_scanned", cells_scanned},
          {"merges", merges},               {"extensions", extensions},
          {"insertions", insertions},       {"recon_nodes", recon_nodes},
          {"recon_visits", recon_visits}};
}

InstrumentationCounters& InstrumentationCounters::operator+=(const InstrumentationCounters& o) {
  owner_reads += o.owner_reads;
  owner_writes += o.owner_writes;
  owner_clears += o.owner_clears;
  cells_scanned += o.cells_scanned;
  merges += o.merges;
  extensions += o.extensions;
  insertions += o.insertions;
  recon_nodes += o.recon_nodes;
  recon_visits += o.recon_visits;
  return *this;
}

void SolverState::reset(std::uint64_t p) {
  if (p < 2 || p > std::numeric_limits<std::uint32_t>::max()) {
    throw InputError("prime modulus out of supported range");
  }
  p_ = p;
  components_.clear();
  owner_.assign(p, OwnerCell{});
  dir_index_.assign(p, kNoComponent);
  pending_.clear();
  shift_ = 0;
  total_length_ = 0;
  counters_ = {};
  forest_.clear();
}

ComponentId SolverState::create_temporary(Residue v, std::uint64_t ell, Residue xi,
                                          NodeId recon) {
  if (v == 0 || v >= p_) throw InputError("component direction must be a nonzero residue");
  if (ell > p_ - 1) throw InvariantViolation("component length exceeds p - 1");
  components_.push_back({v, ell, xi, recon, 0, ComponentStatus::Temporary});
  total_length_ += ell;
  shift_ = add_mod(shift_, xi, p_);
  return static_cast<ComponentId>(components_.size() - 1);
}

void SolverState::reshape(ComponentId id, Residue v, std::uint64_t ell, Residue xi,
                          NodeId recon) {
  Component& c = components_[id];
  if (ell > p_ - 1) throw InvariantViolation("component length exceeds p - 1");
  total_length_ = total_length_ - c.ell + ell;
  shift_ = add_mod(sub_mod(shift_, c.xi, p_), xi, p_);
  c.v = v;
  c.ell = ell;
  c.xi = xi;
  c.recon = recon;
}

void SolverState::set_held(ComponentId id, std::uint64_t held) {
  if (held > components_[id].ell) throw InvariantViolation("held prefix longer than component");
  components_[id].held = held;
}

void SolverState::set_status(ComponentId id, ComponentStatus s) { components_[id].status = s; }

void SolverState::retire(ComponentId id) {
  Component& c = components_[id];
  total_length_ -= c.ell;
  shift_ = sub_mod(shift_, c.xi, p_);
  c.held = 0;
  c.status = ComponentStatus::Retired;
}

ComponentId SolverState::active_with_direction(Residue v) const {
  const ComponentId id = dir_index_[v];
  if (id == kNoComponent) return kNoComponent;
  const Component& c = components_[id];
  return c.status == ComponentStatus::Active && c.v == v ? id : kNoComponent;
}

OwnerCell SolverState::read_owner(Residue r) {
  ++counters_.owner_reads;
  return owner_[r];
}

void SolverState::install_cell(Residue r, ComponentId c, std::uint64_t t) {
  OwnerCell& cell = owner_[r];
  if (!cell.empty()) {
    throw InvariantViolation("install over occupied owner cell at residue " + std::to_string(r));
  }
  cell = {c, static_cast<std::uint32_t>(t)};
  ++counters_.owner_writes;
}

void SolverState::clear_prefix(ComponentId c, std::uint64_t count) {
  const Residue v = components_[c].v;
  Residue r = 0;
  for (std::uint64_t t = 1; t <= count; ++t) {
    r = add_mod(r, v, p_);
    owner_[r] = OwnerCell{};
  }
  counters_.owner_clears += count;
}

std::optional<Collision> SolverState::scan_probe(ComponentId c, std::uint64_t t) {
  const Residue r = times(t, components_[c].v);
  ++counters_.cells_scanned;
  const OwnerCell cell = read_owner(r);
  if (cell.empty()) {
    pending_.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(t)});
    return std::nullopt;
  }
  return Collision{cell.comp, cell.coef};
}

std::optional<std::pair<std::uint64_t, Collision>> SolverState::scan_from(ComponentId c,
                                                                          std::uint64_t first) {
  const Component& comp = components_[c];
  const Residue v = comp.v;
  const std::uint64_t ell = comp.ell;
  if (first > ell) return std::nullopt;
  Residue r = times(first, v);
  std::uint64_t t = first;
  for (; t <= ell; ++t) {
    const OwnerCell cell = owner_[r];
    if (!cell.empty()) {
      const std::uint64_t scanned = t - first + 1;
      counters_.cells_scanned += scanned;
      counters_.owner_reads += scanned;
      return std::pair{t, Collision{cell.comp, cell.coef}};
    }
    pending_.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(t)});
    r = add_mod(r, v, p_);
  }
  counters_.cells_scanned += ell - first + 1;
  counters_.owner_reads += ell - first + 1;
  return std::nullopt;
}

void SolverState::commit_temporary(ComponentId c) {
  Component& comp = components_[c];
  if (comp.status != ComponentStatus::Temporary) {
    throw InvariantViolation("commit of a non-temporary component");
  }
  if (pending_.size() != comp.ell - comp.held) {
    throw InvariantViolation("commit before the scan covered every unheld cell");
  }
  for (const PendingCell& cell : pending_) install_cell(cell.residue, c, cell.coef);
  pending_.clear();
  comp.held = 0;
  comp.status = ComponentStatus::Active;
  dir_index_[comp.v] = c;
}

void SolverState::install_full(ComponentId c) {
  Component& comp = components_[c];
  if (comp.ell != p_ - 1) throw InvariantViolation("full component must have length p - 1");
  Residue r = 0;
  for (std::uint64_t t = 1; t < p_; ++t) {
    r = add_mod(r, comp.v, p_);
    owner_[r] = {c, static_cast<std::uint32_t>(t)};
  }
  counters_.owner_writes += p_ - 1;
  comp.held = comp.ell;
  comp.status = ComponentStatus::Full;
}

void SolverState::detach_active(ComponentId d, bool keep_cells) {
  Component& comp = components_[d];
  if (comp.status != ComponentStatus::Active) {
    throw InvariantViolation("detach of a non-active component");
  }
  dir_index_[comp.v] = kNoComponent;
  if (keep_cells) {
    comp.held = comp.ell;
    comp.status = ComponentStatus::Temporary;
  } else {
    clear_prefix(d, comp.ell);
    retire(d);
  }
}

AuditReport SolverState::audit_disjointness() const {
  std::ostringstream err;
  auto fail = [&]() { return AuditReport{false, err.str()}; };

  ComponentId full = kNoComponent;
  for (ComponentId id = 0; id < components_.size(); ++id) {
    if (components_[id].status != ComponentStatus::Full) continue;
    if (full != kNoComponent) {
      err << "two full components: " << full << " and " << id;
      return fail();
    }
    full = id;
  }

  std::uint64_t expected_cells = 0;
  std::uint64_t lambda = 0;
  Residue shift = 0;
  std::size_t temporaries = 0;
  for (ComponentId id = 0; id < components_.size(); ++id) {
    const Component& c = components_[id];
    if (c.status == ComponentStatus::Retired) continue;
    lambda += c.ell;
    shift = add_mod(shift, c.xi, p_);
    std::uint64_t installed = 0;
    switch (c.status) {
      case ComponentStatus::Active:
        if (c.held != 0) {
          err << "active component " << id << " has held cells";
          return fail();
        }
        // A full progression shadows every active cell.
        installed = full == kNoComponent ? c.ell : 0;
        break;
      case ComponentStatus::Temporary:
        ++temporaries;
        installed = c.held;
        if (full != kNoComponent) {
          err << "temporary component " << id << " alongside a full one";
          return fail();
        }
        break;
      default:
        installed = c.held;
        if (c.ell != p_ - 1 || c.held != c.ell) {
          err << "full component " << id << " is not fully installed";
          return fail();
        }
        break;
    }
    expected_cells += installed;
    for (std::uint64_t t = 1; t <= installed; ++t) {
      const Residue r = times(t, c.v);
      const OwnerCell& cell = owner_[r];
      if (cell.comp != id || cell.coef != t) {
        err << "residue " << r << " should be owned by component " << id << " at t=" << t
            << " but holds ";
        if (cell.empty()) {
          err << "nothing";
        } else {
          err << "component " << cell.comp << " at t=" << cell.coef;
        }
        return fail();
      }
    }
    if (c.status == ComponentStatus::Active && dir_index_[c.v] != id) {
      err << "direction index misses active component " << id << " (v=" << c.v << ")";
      return fail();
    }
  }
  if (temporaries > 1) {
    err << temporaries << " temporary components";
    return fail();
  }
  if (lambda != total_length_) {
    err << "Lambda " << total_length_ << " != sum of lengths " << lambda;
    return fail();
  }
  if (shift != shift_) {
    err << "X " << shift_ << " != sum of offsets " << shift;
    return fail();
  }
  if (full == kNoComponent && total_length_ > 2 * p_) {
    err << "Lambda " << total_length_ << " exceeds 2p";
    return fail();
  }

  std::uint64_t occupied = 0;
  for (Residue r = 1; r < p_; ++r) {
    const OwnerCell& cell = owner_[r];
    if (cell.empty()) continue;
    ++occupied;
    if (cell.comp >= components_.size()) {
      err << "residue " << r << " names unknown component " << cell.comp;
      return fail();
    }
    const Component& c = components_[cell.comp];
    if (c.status == ComponentStatus::Retired || times(cell.coef, c.v) != r) {
      err << "residue " << r << " has stale owner component " << cell.comp << " ("
          << to_string(c.status) << ") at t=" << cell.coef;
      return fail();
    }
  }
  if (!owner_[0].empty()) {
    err << "residue 0 is owned";
    return fail();
  }
  // Every expected cell was found with the right owner, so equal counts rule
  // out both overlaps and strays.
  if (occupied != expected_cells) {
    err << "owner array holds " << occupied << " cells, components account for "
        << expected_cells;
    return fail();
  }
  for (Residue r = 1; r < p_; ++r) {
    const ComponentId id = dir_index_[r];
    if (id == kNoComponent) continue;
    const Component& c = components_[id];
    if (c.status != ComponentStatus::Active || c.v != r) {
      err << "direction index entry " << r << " names component " << id << " ("
          << to_string(c.status) << ", v=" << c.v << ")";
      return fail();
    }
  }
  return {};
}

}  // namespace egz
