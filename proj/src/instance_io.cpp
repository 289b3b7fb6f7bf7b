#include "vne/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vne {

namespace {

constexpr const char* kMagic = "vnesim-instance";
constexpr int kVersion = 1;

std::string format_time(double t) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", t);
    return buf;
}

[[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("instance parse error: " + what);
}

}  // namespace

void write_instance(std::ostream& out, const Instance& instance) {
    const auto& net = instance.substrate;
    out << kMagic << ' ' << kVersion << '\n';
    out << "substrate " << net.domain_count() << '\n';
    out << "nodes " << net.node_count() << '\n';
    for (const auto& n : net.nodes())
        out << n.id << ' ' << n.domain << ' ' << n.cpu_capacity << ' ' << n.cpu_residual
            << ' ' << n.cpu_unit_price << '\n';
    out << "links " << net.link_count() << '\n';
    for (const auto& l : net.links())
        out << l.a << ' ' << l.b << ' ' << l.bw_capacity << ' ' << l.bw_residual << ' '
            << l.bw_unit_price << ' ' << (l.inter_domain ? 1 : 0) << '\n';
    out << "vnrs " << instance.vnrs.size() << '\n';
    for (const auto& vnr : instance.vnrs) {
        out << "vnr " << vnr.id << ' ' << format_time(vnr.arrival_time) << ' '
            << format_time(vnr.lifetime) << '\n';
        out << "vnodes " << vnr.nodes.size() << '\n';
        for (const auto& n : vnr.nodes) out << n.id << ' ' << n.cpu_demand << '\n';
        out << "vlinks " << vnr.links.size() << '\n';
        for (const auto& l : vnr.links) out << l.a << ' ' << l.b << ' ' << l.bw_demand << '\n';
    }
}

Instance read_instance(std::istream& in) {
    Instance instance;
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != kMagic) fail("bad header");
    if (version != kVersion) fail("unsupported version");

    std::string tag;
    int domains = 0;
    if (!(in >> tag >> domains) || tag != "substrate") fail("expected substrate section");
    instance.substrate.set_domain_count(domains);

    int node_count = 0;
    if (!(in >> tag >> node_count) || tag != "nodes") fail("expected nodes section");
    for (int i = 0; i < node_count; ++i) {
        int id, domain, cap, residual, price;
        if (!(in >> id >> domain >> cap >> residual >> price)) fail("bad node row");
        int created = instance.substrate.add_node(domain, cap, price);
        if (created != id) fail("node ids must be dense and ordered");
        if (residual != cap) fail("instance files carry unallocated networks");
    }

    int link_count = 0;
    if (!(in >> tag >> link_count) || tag != "links") fail("expected links section");
    for (int i = 0; i < link_count; ++i) {
        int a, b, cap, residual, price, inter;
        if (!(in >> a >> b >> cap >> residual >> price >> inter)) fail("bad link row");
        if (residual != cap) fail("instance files carry unallocated networks");
        instance.substrate.add_link(a, b, cap, price, inter != 0);
    }

    std::size_t vnr_count = 0;
    if (!(in >> tag >> vnr_count) || tag != "vnrs") fail("expected vnrs section");
    for (std::size_t v = 0; v < vnr_count; ++v) {
        VirtualNetworkRequest vnr;
        if (!(in >> tag >> vnr.id >> vnr.arrival_time >> vnr.lifetime) || tag != "vnr")
            fail("expected vnr row");
        std::size_t n = 0;
        if (!(in >> tag >> n) || tag != "vnodes") fail("expected vnodes section");
        for (std::size_t i = 0; i < n; ++i) {
            VirtualNode vn;
            if (!(in >> vn.id >> vn.cpu_demand)) fail("bad vnode row");
            vnr.nodes.push_back(vn);
        }
        std::size_t m = 0;
        if (!(in >> tag >> m) || tag != "vlinks") fail("expected vlinks section");
        for (std::size_t i = 0; i < m; ++i) {
            VirtualLink vl;
            if (!(in >> vl.a >> vl.b >> vl.bw_demand)) fail("bad vlink row");
            vnr.links.push_back(vl);
        }
        instance.vnrs.push_back(std::move(vnr));
    }
    return instance;
}

void save_instance(const std::string& path, const Instance& instance) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_instance(out, instance);
    if (!out) throw std::runtime_error("write failed for " + path);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_instance(in);
}

}  // namespace vne
