#include "daqc/schedule.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "daqc/compiler.hpp"
#include "daqc/units.hpp"

namespace daqc {

namespace {

char axis_char(Pauli p) { return static_cast<char>(std::tolower(pauli_char(p))); }

const char* kind_token(BlockKind kind) {
  switch (kind) {
    case BlockKind::TypeA: return "a";
    case BlockKind::TypeB: return "b";
    case BlockKind::CoulombA: return "coulomb";
    default: return "rot";
  }
}

std::string format_angle_over_pi(const AnalogBlock& block) {
  if (block.kind == BlockKind::TypeB) return "1/4";  // always exactly pi/4
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", block.angle / kPi);
  return buf;
}

std::string format_pairs(const AnalogBlock& block) {
  std::string out;
  if (block.kind == BlockKind::LocalRotation) {
    for (std::size_t i = 0; i < block.sites.size(); ++i) {
      if (i) out.push_back(';');
      out += std::to_string(block.sites[i]);
      out.push_back(':');
      out.push_back(axis_char(block.axis));
    }
    return out;
  }
  for (std::size_t i = 0; i < block.pairs.size(); ++i) {
    const auto& p = block.pairs[i];
    if (i) out.push_back(';');
    out += std::to_string(p.j);
    out.push_back(':');
    out.push_back(axis_char(p.a));
    out.push_back('-');
    out += std::to_string(p.k);
    out.push_back(':');
    out.push_back(axis_char(p.b));
  }
  return out;
}

std::string format_phases(const AnalogBlock& block) {
  if (block.kind != BlockKind::TypeA && block.kind != BlockKind::TypeB) return "";
  std::string out;
  const auto drives = drive_settings_for(block);
  for (std::size_t i = 0; i < drives.size(); ++i) {
    if (i) out.push_back(';');
    out += std::to_string(drives[i].link);
    out.push_back(':');
    out += drives[i].phase1.to_string();
    out.push_back(':');
    out += drives[i].phase2.to_string();
  }
  return out;
}

}  // namespace

void export_schedule(const Schedule& schedule, std::ostream& os) {
  char head[160];
  std::snprintf(head, sizeof head, "# schedule cols=%d rows=%d at=%.12g steps=%d coulomb=%d\n",
                schedule.lattice.cols, schedule.lattice.rows, schedule.simulated_at,
                schedule.steps, schedule.lattice.include_coulomb ? 1 : 0);
  os << head;
  os << "# step,index,kind,angle_over_pi,pairs,dagger,phases\n";
  for (int step = 1; step <= schedule.steps; ++step) {
    int index = 1;
    for (const auto& block : schedule.step_blocks) {
      os << step << ',' << index << ',' << kind_token(block.kind) << ','
         << format_angle_over_pi(block) << ',' << format_pairs(block) << ','
         << (block.dagger ? 1 : 0) << ',' << format_phases(block) << '\n';
      ++index;
    }
  }
}

std::string schedule_to_string(const Schedule& schedule) {
  std::ostringstream ss;
  export_schedule(schedule, ss);
  return ss.str();
}

}  // namespace daqc
