#include "subcad/lifting.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace subcad {

int Cell::dim() const {
  return static_cast<int>(std::count_if(index.begin(), index.end(), [](int i) { return i % 2 == 1; }));
}

std::string Cell::index_string() const {
  std::string s = "(";
  for (size_t i = 0; i < index.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(index[i]);
  }
  return s + ")";
}

bool index_less(const Cell& a, const Cell& b) { return a.index < b.index; }

Cell root_cell() { return Cell{}; }

Stack generate_stack(const std::vector<Polynomial>& p, const Cell& c) {
  Stack stack;
  std::vector<Polynomial> live;
  for (const auto& f : p) {
    if (f.main_var() != c.level()) {
      throw std::invalid_argument("generate_stack: " + f.to_string() + " does not have main variable at level " +
                                  std::to_string(c.level() + 1));
    }
    if (c.level() > 0 && nullified_at(f, c.sample)) {
      stack.nullified.push_back(f);
    } else {
      live.push_back(f);
    }
  }
  const std::vector<TaggedRoot> roots = isolate_roots_of_set(live, c.sample);
  const int s = static_cast<int>(roots.size());
  stack.cells.reserve(static_cast<size_t>(2 * s + 1));
  auto make = [&](int position, Coord coord) {
    Cell cell;
    cell.index = c.index;
    cell.index.push_back(position);
    cell.sample = c.sample;
    cell.sample.push_back(std::move(coord));
    stack.cells.push_back(std::move(cell));
  };
  for (int i = 0; i <= s; ++i) {
    const Coord* below = i > 0 ? &roots[static_cast<size_t>(i - 1)].root : nullptr;
    const Coord* above = i < s ? &roots[static_cast<size_t>(i)].root : nullptr;
    make(2 * i + 1, Coord(sector_sample(below, above)));
    if (i < s) make(2 * i + 2, roots[static_cast<size_t>(i)].root);
  }
  return stack;
}

std::vector<Cell> base_phase(const std::vector<Polynomial>& p1) { return generate_stack(p1, root_cell()).cells; }

bool check_nullified(const Polynomial& p, const Cell& c) { return nullified_at(p, c.sample); }

NotWellOriented::NotWellOriented(Polynomial poly, Cell cell)
    : std::runtime_error("not well oriented: " + poly.to_string() + " vanishes identically over cell " +
                         cell.index_string()),
      poly_(std::move(poly)),
      cell_(std::move(cell)) {}

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SUBCAD_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
  const size_t workers = std::min<size_t>(static_cast<size_t>(std::max(jobs, 1)), count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex error_mutex;
  size_t error_at = count;
  std::exception_ptr error;
  auto work = [&] {
    while (!stop) {
      const size_t i = next++;
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (i < error_at) {
          error_at = i;
          error = std::current_exception();
        }
        stop = true;
      }
    }
  };
  std::vector<std::thread> threads;
  for (size_t t = 0; t < workers; ++t) threads.emplace_back(work);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<Cell> lift_level(const std::vector<Cell>& base, const std::vector<Polynomial>& p, const LiftOptions& opts,
                             const std::function<bool(const Cell&)>& keep) {
  std::vector<std::vector<Cell>> parts(base.size());
  parallel_for(base.size(), resolve_jobs(opts.jobs), [&](size_t i) {
    Stack s = generate_stack(p, base[i]);
    if (opts.check_well_oriented && !s.nullified.empty() && base[i].dim() > 0) {
      throw NotWellOriented(s.nullified.front(), base[i]);
    }
    for (auto& c : s.cells) {
      if (!keep || keep(c)) parts[i].push_back(std::move(c));
    }
  });
  std::vector<Cell> out;
  for (auto& part : parts) {
    for (auto& c : part) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Cell> lift_full(const std::vector<std::vector<Polynomial>>& tiers, const LiftOptions& opts) {
  if (tiers.empty()) return {root_cell()};
  std::vector<Cell> cells = base_phase(tiers[0]);
  for (size_t v = 1; v < tiers.size(); ++v) cells = lift_level(cells, tiers[v], opts);
  return cells;
}

std::vector<int> signs_at(const std::vector<Polynomial>& p, const Cell& c) {
  std::vector<int> out;
  out.reserve(p.size());
  for (const auto& f : p) out.push_back(sign_at(f, c.sample));
  return out;
}

}  // namespace subcad
