#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace railsched {

using TrainId = int;
using RouteId = int;
using PacketId = int;
using Day = int;       // 1-based; a plan covers days 1..horizon_days
using Km = std::int64_t;

// Synthetic route assigned to a train in the spare (standby) state. It has
// zero mileage, every train may take it, and any number of trains may take
// it on the same day. It never appears in Instance::routes.
inline constexpr RouteId kSpareRoute = 0;

struct Train {
  TrainId id = 0;
  std::string name;  // display label only; empty means "M<id>"
  Day begin_day = 1;
  Day end_day = 1;
  Km maintenance_cycle_km = 0;
  Km initial_mileage_km = 0;  // cumulative mileage at begin_day - 1
  std::optional<PacketId> next_packet;
  std::optional<Km> min_mileage_km;
  std::optional<Km> max_mileage_km;

  std::string label() const;
  int window_length() const { return end_day - begin_day + 1; }
  bool in_window(Day day) const { return day >= begin_day && day <= end_day; }

  bool operator==(const Train&) const = default;
};

// A transportation task or one day's slice of a multi-day task. Sub-routes of
// the same task are linked head-to-tail through `successor`.
struct Route {
  RouteId id = 0;
  Km mileage_km = 0;
  std::optional<RouteId> successor;
  int day_offset = 0;  // position inside the chain, 0 for the head

  bool operator==(const Route&) const = default;
};

struct MaintenancePacket {
  PacketId id = 0;
  std::string name;  // display label only; empty means the numeric id
  int duration_days = 1;

  std::string label() const;

  bool operator==(const MaintenancePacket&) const = default;
};

struct Instance {
  std::vector<Train> trains;
  std::vector<Route> routes;
  std::vector<MaintenancePacket> packets;
  int horizon_days = 1;
  int depot_capacity = 0;
  // eligibility[i][j]: trains[i] may run routes[j].
  std::vector<std::vector<bool>> eligibility;
  bool mileage_range_enabled = false;
  // Allows sub-route chains longer than two.
  bool multi_day_routes = false;

  const Train* find_train(TrainId id) const;
  const Route* find_route(RouteId id) const;
  const MaintenancePacket* find_packet(PacketId id) const;

  bool operator==(const Instance&) const = default;
};

enum class DefectSubject { kInstance = 0, kTrain = 1, kRoute = 2, kPacket = 3 };

enum class DefectCode {
  kHorizonNotPositive,
  kCapacityNegative,
  kEligibilityShape,
  kDuplicateId,
  kTrainWindowReversed,
  kTrainWindowOutsideHorizon,
  kCycleNotPositive,
  kInitialMileageOutOfRange,
  kMileageBoundsInvalid,
  kUnknownPacket,
  kReservedRouteId,
  kNegativeMileage,
  kUnknownSuccessor,
  kSelfSuccessor,
  kSharedSuccessor,
  kChainCycle,
  kChainTooLong,
  kDayOffsetMismatch,
  kDurationNotPositive,
};

struct Defect {
  DefectSubject subject = DefectSubject::kInstance;
  int id = 0;  // entity id; 0 for instance-level defects
  DefectCode code = DefectCode::kHorizonNotPositive;
  std::string message;

  std::string to_string() const;
};

// Returns one entry per violated structural invariant, ordered by
// (subject, id). An empty list means the instance is valid.
std::vector<Defect> validate_instance(const Instance& instance);

std::vector<std::string> describe(std::span<const Defect> defects);

// Throws InvalidInstanceError when validate_instance reports defects.
void require_valid(const Instance& instance);

// Dense lookups over a validated instance. Holds a reference; the instance
// must outlive the index.
class InstanceIndex {
 public:
  explicit InstanceIndex(const Instance& instance);

  const Instance& instance() const { return *instance_; }

  std::optional<std::size_t> train_pos(TrainId id) const;
  std::optional<std::size_t> route_pos(RouteId id) const;
  const MaintenancePacket* packet(PacketId id) const;

  // Spare is eligible to every train; unknown routes to none.
  bool eligible(std::size_t train_pos, RouteId route) const;
  Km route_mileage(RouteId route) const;  // 0 for spare and unknown ids

  // Chain structure over route positions.
  std::optional<RouteId> predecessor(RouteId route) const;
  RouteId chain_head(RouteId route) const;
  int chain_position(RouteId route) const;  // 0 for a head
  int chain_length(RouteId head) const;
  Km chain_mileage(RouteId head) const;
  // Route ids of the chain starting at `head`, in day order.
  const std::vector<RouteId>& chain(RouteId head) const;
  // Chain heads in routes-list order.
  const std::vector<RouteId>& heads() const { return heads_; }
  // True when a chain starting on `day` ends inside the horizon, i.e. the
  // head must be covered on that day.
  bool head_required(RouteId head, Day day) const;

  // Packet duration of the train's next maintenance packet; nullopt when the
  // train has no designated packet.
  std::optional<int> next_duration(std::size_t train_pos) const;

 private:
  const Instance* instance_;
  std::unordered_map<TrainId, std::size_t> train_pos_;
  std::unordered_map<RouteId, std::size_t> route_pos_;
  std::unordered_map<PacketId, std::size_t> packet_pos_;
  std::vector<std::optional<RouteId>> predecessor_;
  std::vector<RouteId> head_of_;
  std::vector<int> position_;
  std::vector<std::vector<RouteId>> chain_of_;  // filled for heads only
  std::vector<RouteId> heads_;
};

}  // namespace railsched
