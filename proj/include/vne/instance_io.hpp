#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vne/model.hpp"

namespace vne {

struct Instance {
    SubstrateNetwork substrate;
    std::vector<VirtualNetworkRequest> vnrs;
};

// Plain-text instance format (documented in the README) so generated
// topologies and request streams can be inspected, shared, and replayed.
void write_instance(std::ostream& out, const Instance& instance);
Instance read_instance(std::istream& in);

void save_instance(const std::string& path, const Instance& instance);
Instance load_instance(const std::string& path);

}  // namespace vne
