#include "railsched/instance.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "railsched/errors.hpp"

namespace railsched {

std::string Train::label() const {
  return name.empty() ? "M" + std::to_string(id) : name;
}

std::string MaintenancePacket::label() const {
  return name.empty() ? std::to_string(id) : name;
}

const Train* Instance::find_train(TrainId id) const {
  auto it = std::find_if(trains.begin(), trains.end(),
                         [id](const Train& t) { return t.id == id; });
  return it == trains.end() ? nullptr : &*it;
}

const Route* Instance::find_route(RouteId id) const {
  auto it = std::find_if(routes.begin(), routes.end(),
                         [id](const Route& r) { return r.id == id; });
  return it == routes.end() ? nullptr : &*it;
}

const MaintenancePacket* Instance::find_packet(PacketId id) const {
  auto it = std::find_if(packets.begin(), packets.end(),
                         [id](const MaintenancePacket& p) { return p.id == id; });
  return it == packets.end() ? nullptr : &*it;
}

namespace {

const char* subject_name(DefectSubject s) {
  switch (s) {
    case DefectSubject::kInstance: return "instance";
    case DefectSubject::kTrain: return "train";
    case DefectSubject::kRoute: return "route";
    case DefectSubject::kPacket: return "packet";
  }
  return "?";
}

class DefectSink {
 public:
  void add(DefectSubject subject, int id, DefectCode code, std::string msg) {
    defects_.push_back(Defect{subject, id, code, std::move(msg)});
  }

  std::vector<Defect> finish() && {
    std::stable_sort(defects_.begin(), defects_.end(),
                     [](const Defect& a, const Defect& b) {
                       if (a.subject != b.subject) return a.subject < b.subject;
                       return a.id < b.id;
                     });
    return std::move(defects_);
  }

 private:
  std::vector<Defect> defects_;
};

template <class T>
std::set<int> duplicated_ids(const std::vector<T>& items) {
  std::map<int, int> seen;
  for (const auto& item : items) ++seen[item.id];
  std::set<int> dups;
  for (auto [id, n] : seen)
    if (n > 1) dups.insert(id);
  return dups;
}

void check_instance_level(const Instance& in, DefectSink& sink) {
  if (in.horizon_days < 1)
    sink.add(DefectSubject::kInstance, 0, DefectCode::kHorizonNotPositive,
             "horizon_days must be at least 1");
  if (in.depot_capacity < 0)
    sink.add(DefectSubject::kInstance, 0, DefectCode::kCapacityNegative,
             "depot_capacity must be non-negative");
  bool shape_ok = in.eligibility.size() == in.trains.size();
  for (const auto& row : in.eligibility)
    shape_ok = shape_ok && row.size() == in.routes.size();
  if (!shape_ok) {
    std::ostringstream os;
    os << "eligibility must be a " << in.trains.size() << " x "
       << in.routes.size() << " matrix";
    sink.add(DefectSubject::kInstance, 0, DefectCode::kEligibilityShape,
             os.str());
  }
}

void check_trains(const Instance& in, DefectSink& sink) {
  for (int id : duplicated_ids(in.trains))
    sink.add(DefectSubject::kTrain, id, DefectCode::kDuplicateId,
             "duplicate train id");
  for (const Train& t : in.trains) {
    if (t.begin_day > t.end_day)
      sink.add(DefectSubject::kTrain, t.id, DefectCode::kTrainWindowReversed,
               "train window reversed");
    if (t.begin_day < 1 || t.end_day > in.horizon_days)
      sink.add(DefectSubject::kTrain, t.id,
               DefectCode::kTrainWindowOutsideHorizon,
               "train window must lie within days 1.." +
                   std::to_string(in.horizon_days));
    if (t.maintenance_cycle_km <= 0)
      sink.add(DefectSubject::kTrain, t.id, DefectCode::kCycleNotPositive,
               "maintenance cycle must be positive");
    if (t.initial_mileage_km < 0 ||
        t.initial_mileage_km > t.maintenance_cycle_km)
      sink.add(DefectSubject::kTrain, t.id,
               DefectCode::kInitialMileageOutOfRange,
               "initial mileage must lie within [0, maintenance cycle]");
    bool bounds_ok = (!t.min_mileage_km || *t.min_mileage_km >= 0) &&
                     (!t.max_mileage_km || *t.max_mileage_km >= 0);
    if (t.min_mileage_km && t.max_mileage_km &&
        *t.min_mileage_km > *t.max_mileage_km)
      bounds_ok = false;
    if (!bounds_ok)
      sink.add(DefectSubject::kTrain, t.id, DefectCode::kMileageBoundsInvalid,
               "mileage bounds must satisfy 0 <= min <= max");
    if (t.next_packet && !in.find_packet(*t.next_packet))
      sink.add(DefectSubject::kTrain, t.id, DefectCode::kUnknownPacket,
               "next packet " + std::to_string(*t.next_packet) +
                   " does not exist");
  }
}

void check_routes(const Instance& in, DefectSink& sink) {
  const std::set<int> dups = duplicated_ids(in.routes);
  for (int id : dups)
    sink.add(DefectSubject::kRoute, id, DefectCode::kDuplicateId,
             "duplicate route id");

  std::map<RouteId, const Route*> by_id;
  for (const Route& r : in.routes) by_id.emplace(r.id, &r);

  std::map<RouteId, std::vector<RouteId>> referrers;
  bool links_ok = dups.empty();
  for (const Route& r : in.routes) {
    if (r.id == kSpareRoute)
      sink.add(DefectSubject::kRoute, r.id, DefectCode::kReservedRouteId,
               "route id 0 is reserved for the spare state");
    else if (r.id < 0)
      sink.add(DefectSubject::kRoute, r.id, DefectCode::kReservedRouteId,
               "route id must be at least 1");
    if (r.mileage_km < 0)
      sink.add(DefectSubject::kRoute, r.id, DefectCode::kNegativeMileage,
               "mileage must be non-negative");
    if (r.day_offset < 0) {
      sink.add(DefectSubject::kRoute, r.id, DefectCode::kDayOffsetMismatch,
               "day_offset must be non-negative");
    }
    if (!r.successor) continue;
    if (*r.successor == r.id) {
      sink.add(DefectSubject::kRoute, r.id, DefectCode::kSelfSuccessor,
               "route lists itself as successor");
      links_ok = false;
    } else if (!by_id.count(*r.successor)) {
      sink.add(DefectSubject::kRoute, r.id, DefectCode::kUnknownSuccessor,
               "successor " + std::to_string(*r.successor) +
                   " does not exist");
      links_ok = false;
    } else {
      referrers[*r.successor].push_back(r.id);
    }
  }
  for (const auto& [succ, from] : referrers) {
    if (from.size() > 1) {
      sink.add(DefectSubject::kRoute, succ, DefectCode::kSharedSuccessor,
               "route is the successor of more than one route");
      links_ok = false;
    }
  }
  if (!links_ok) return;

  // Every node has in-degree <= 1 and out-degree <= 1, so each component is a
  // simple path or a simple cycle.
  std::set<RouteId> on_path;
  for (const Route& r : in.routes) {
    if (referrers.count(r.id)) continue;  // not a head
    int length = 0;
    for (const Route* cur = &r; cur;
         cur = cur->successor ? by_id.at(*cur->successor) : nullptr) {
      on_path.insert(cur->id);
      if (cur->day_offset != length && cur->day_offset >= 0)
        sink.add(DefectSubject::kRoute, cur->id,
                 DefectCode::kDayOffsetMismatch,
                 "day_offset " + std::to_string(cur->day_offset) +
                     " does not match chain position " +
                     std::to_string(length));
      ++length;
    }
    if (length > 2 && !in.multi_day_routes)
      sink.add(DefectSubject::kRoute, r.id, DefectCode::kChainTooLong,
               "chain length " + std::to_string(length) +
                   " exceeds the two-sub-route limit; set multi_day_routes "
                   "to allow longer chains");
  }
  // Whatever was not reached from a head sits on a cycle.
  std::set<RouteId> reported;
  for (const Route& r : in.routes) {
    if (on_path.count(r.id) || reported.count(r.id)) continue;
    RouteId smallest = r.id;
    for (const Route* cur = by_id.at(*r.successor); cur->id != r.id;
         cur = by_id.at(*cur->successor)) {
      smallest = std::min(smallest, cur->id);
      reported.insert(cur->id);
    }
    reported.insert(r.id);
    sink.add(DefectSubject::kRoute, smallest, DefectCode::kChainCycle,
             "successor links form a cycle");
  }
}

void check_packets(const Instance& in, DefectSink& sink) {
  for (int id : duplicated_ids(in.packets))
    sink.add(DefectSubject::kPacket, id, DefectCode::kDuplicateId,
             "duplicate packet id");
  for (const MaintenancePacket& p : in.packets)
    if (p.duration_days < 1)
      sink.add(DefectSubject::kPacket, p.id, DefectCode::kDurationNotPositive,
               "duration_days must be at least 1");
}

}  // namespace

std::string Defect::to_string() const {
  std::string out = subject_name(subject);
  if (subject != DefectSubject::kInstance) out += " " + std::to_string(id);
  return out + ": " + message;
}

std::vector<Defect> validate_instance(const Instance& instance) {
  DefectSink sink;
  check_instance_level(instance, sink);
  check_trains(instance, sink);
  check_routes(instance, sink);
  check_packets(instance, sink);
  return std::move(sink).finish();
}

std::vector<std::string> describe(std::span<const Defect> defects) {
  std::vector<std::string> out;
  out.reserve(defects.size());
  for (const Defect& d : defects) out.push_back(d.to_string());
  return out;
}

void require_valid(const Instance& instance) {
  auto defects = validate_instance(instance);
  if (!defects.empty())
    throw InvalidInstanceError("instance is invalid", describe(defects));
}

InstanceIndex::InstanceIndex(const Instance& instance) : instance_(&instance) {
  const auto& routes = instance.routes;
  for (std::size_t i = 0; i < instance.trains.size(); ++i)
    train_pos_.emplace(instance.trains[i].id, i);
  for (std::size_t j = 0; j < routes.size(); ++j)
    route_pos_.emplace(routes[j].id, j);
  for (std::size_t k = 0; k < instance.packets.size(); ++k)
    packet_pos_.emplace(instance.packets[k].id, k);

  predecessor_.assign(routes.size(), std::nullopt);
  for (const Route& r : routes)
    if (r.successor)
      if (auto s = route_pos(*r.successor)) predecessor_[*s] = r.id;

  head_of_.assign(routes.size(), kSpareRoute);
  position_.assign(routes.size(), 0);
  chain_of_.assign(routes.size(), {});
  for (std::size_t j = 0; j < routes.size(); ++j) {
    if (predecessor_[j]) continue;
    heads_.push_back(routes[j].id);
    std::vector<RouteId>& chain = chain_of_[j];
    std::optional<RouteId> cur = routes[j].id;
    while (cur && chain.size() <= routes.size()) {
      std::size_t pos = *route_pos(*cur);
      head_of_[pos] = routes[j].id;
      position_[pos] = static_cast<int>(chain.size());
      chain.push_back(*cur);
      cur = routes[pos].successor;
    }
  }
}

std::optional<std::size_t> InstanceIndex::train_pos(TrainId id) const {
  auto it = train_pos_.find(id);
  if (it == train_pos_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> InstanceIndex::route_pos(RouteId id) const {
  auto it = route_pos_.find(id);
  if (it == route_pos_.end()) return std::nullopt;
  return it->second;
}

const MaintenancePacket* InstanceIndex::packet(PacketId id) const {
  auto it = packet_pos_.find(id);
  if (it == packet_pos_.end()) return nullptr;
  return &instance_->packets[it->second];
}

bool InstanceIndex::eligible(std::size_t train_pos, RouteId route) const {
  if (route == kSpareRoute) return true;
  auto pos = route_pos(route);
  return pos && instance_->eligibility[train_pos][*pos];
}

Km InstanceIndex::route_mileage(RouteId route) const {
  auto pos = route_pos(route);
  return pos ? instance_->routes[*pos].mileage_km : 0;
}

std::optional<RouteId> InstanceIndex::predecessor(RouteId route) const {
  auto pos = route_pos(route);
  return pos ? predecessor_[*pos] : std::nullopt;
}

RouteId InstanceIndex::chain_head(RouteId route) const {
  return head_of_[route_pos(route).value()];
}

int InstanceIndex::chain_position(RouteId route) const {
  return position_[route_pos(route).value()];
}

int InstanceIndex::chain_length(RouteId head) const {
  return static_cast<int>(chain(head).size());
}

Km InstanceIndex::chain_mileage(RouteId head) const {
  Km total = 0;
  for (RouteId r : chain(head)) total += route_mileage(r);
  return total;
}

const std::vector<RouteId>& InstanceIndex::chain(RouteId head) const {
  return chain_of_[route_pos(head).value()];
}

bool InstanceIndex::head_required(RouteId head, Day day) const {
  return day >= 1 && day + chain_length(head) - 1 <= instance_->horizon_days;
}

std::optional<int> InstanceIndex::next_duration(std::size_t train_pos) const {
  const Train& t = instance_->trains[train_pos];
  if (!t.next_packet) return std::nullopt;
  const MaintenancePacket* p = packet(*t.next_packet);
  if (!p) return std::nullopt;
  return p->duration_days;
}

}  // namespace railsched
