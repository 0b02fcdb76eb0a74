#include "nka/descriptor.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nka/errors.hpp"
#include "nka/orders.hpp"
#include "nka/valuation.hpp"

namespace nka {

using json = nlohmann::json;

Tri tri_and(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False) return Tri::False;
    if (a == Tri::True && b == Tri::True) return Tri::True;
    return Tri::Unknown;
}

OrderStream OrderStream::explicit_orders(std::vector<Integer> orders, bool exhaustive,
                                         bool quotient_tower) {
    if (orders.empty()) throw descriptor_error("order stream: explicit list is empty");
    for (const auto& o : orders)
        if (o < 1) throw descriptor_error("order stream: orders must be positive");
    if (quotient_tower) {
        for (std::size_t i = 0; i + 1 < orders.size(); ++i)
            if (orders[i + 1] % orders[i] != 0)
                throw descriptor_error("order stream: tower entry does not divide its successor");
    }
    OrderStream s;
    s.orders_ = std::move(orders);
    s.exhaustive_ = exhaustive;
    s.quotient_tower_ = quotient_tower;
    return s;
}

OrderStream OrderStream::formula(std::function<Integer(int)> order_at,
                                 std::vector<Stabilization> stabilizations) {
    if (!order_at) throw descriptor_error("order stream: missing formula");
    OrderStream s;
    s.order_at_ = std::move(order_at);
    s.stabilizations_ = std::move(stabilizations);
    return s;
}

Integer OrderStream::order_at(int k) const {
    if (k < 1) throw precondition_error("order stream: index must be >= 1");
    if (order_at_) return order_at_(k);
    if (k > static_cast<int>(orders_.size()))
        throw precondition_error("order stream: index beyond explicit list");
    return orders_[static_cast<std::size_t>(k) - 1];
}

ExponentResult OrderStream::exponent(long p, int depth) const {
    if (!order_at_) {
        long best = 0;
        for (const auto& o : orders_) best = std::max(best, padic_valuation(o, Integer(p)));
        return {best, exhaustive_};
    }
    for (const auto& s : stabilizations_)
        if (s.prime == p) return {s.exponent, true};
    long best = 0;
    for (int k = 1; k <= depth; ++k)
        best = std::max(best, padic_valuation(order_at_(k), Integer(p)));
    return {best, false};
}

// ---------------------------------------------------------------------------

GroupDescriptor GroupDescriptor::finite(Integer order) {
    if (order < 1) throw descriptor_error("finite descriptor: order must be positive");
    GroupDescriptor d;
    d.kind_ = Kind::Finite;
    d.order_ = std::move(order);
    d.compact_ = Tri::True;
    d.locally_elliptic_ = Tri::True;
    return d;
}

GroupDescriptor GroupDescriptor::finite(GroupPtr group) {
    if (!group) throw descriptor_error("finite descriptor: null group");
    auto d = finite(group->order_integer());
    d.group_ = std::move(group);
    return d;
}

GroupDescriptor GroupDescriptor::cyclic(long n) {
    if (n < 1) throw descriptor_error("cyclic descriptor: order must be positive");
    GroupDescriptor d;
    d.kind_ = Kind::Cyclic;
    d.order_ = n;
    d.compact_ = Tri::True;
    d.locally_elliptic_ = Tri::True;
    return d;
}

GroupDescriptor GroupDescriptor::symmetric(int n) {
    if (n < 1) throw descriptor_error("symmetric descriptor: degree must be positive");
    GroupDescriptor d;
    d.kind_ = Kind::Symmetric;
    d.order_ = factorial(n);
    d.compact_ = Tri::True;
    d.locally_elliptic_ = Tri::True;
    return d;
}

GroupDescriptor GroupDescriptor::profinite(OrderStream stream) {
    GroupDescriptor d;
    d.kind_ = Kind::Profinite;
    d.stream_ = std::move(stream);
    d.compact_ = Tri::True;
    d.locally_elliptic_ = Tri::True;
    return d;
}

GroupDescriptor GroupDescriptor::directed_union(std::vector<GroupDescriptor> members,
                                                bool open_members) {
    if (members.empty()) throw descriptor_error("directed union: no members");
    GroupDescriptor d;
    d.kind_ = Kind::DirectedUnion;
    d.open_members_ = open_members;
    d.locally_elliptic_ = Tri::True;
    for (const auto& m : members) d.locally_elliptic_ = tri_and(d.locally_elliptic_, m.locally_elliptic());
    d.compact_ = members.size() == 1 ? members.front().compact() : Tri::Unknown;
    d.children_ = std::move(members);
    return d;
}

GroupDescriptor GroupDescriptor::extension(GroupDescriptor kernel, GroupDescriptor quotient) {
    GroupDescriptor d;
    d.kind_ = Kind::Extension;
    d.compact_ = tri_and(kernel.compact(), quotient.compact());
    d.locally_elliptic_ = tri_and(kernel.locally_elliptic(), quotient.locally_elliptic());
    d.children_.push_back(std::move(kernel));
    d.children_.push_back(std::move(quotient));
    return d;
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> members) {
    if (members.empty()) throw descriptor_error("product: no members");
    GroupDescriptor d;
    d.kind_ = Kind::Product;
    d.compact_ = Tri::True;
    d.locally_elliptic_ = Tri::True;
    for (const auto& m : members) {
        d.compact_ = tri_and(d.compact_, m.compact());
        d.locally_elliptic_ = tri_and(d.locally_elliptic_, m.locally_elliptic());
    }
    d.children_ = std::move(members);
    return d;
}

GroupDescriptor GroupDescriptor::family(const std::string& name,
                                        std::map<std::string, long> params) {
    GroupDescriptor d;
    d.kind_ = Kind::Family;
    d.family_name_ = name;
    d.params_ = std::move(params);
    d.validate_family();
    if (name == "z_ell" || name == "tree_fix") {
        d.compact_ = Tri::True;
        d.locally_elliptic_ = Tri::True;
    } else {
        // discrete locally finite unions and the ell-adic field: non-compact
        d.compact_ = Tri::False;
        d.locally_elliptic_ = Tri::True;
    }
    return d;
}

namespace {

long require_param(const std::map<std::string, long>& params, const std::string& key,
                   const std::string& family) {
    auto it = params.find(key);
    if (it == params.end())
        throw descriptor_error("family " + family + ": missing parameter '" + key + "'");
    return it->second;
}

long param_or(const std::map<std::string, long>& params, const std::string& key, long dflt) {
    auto it = params.find(key);
    return it == params.end() ? dflt : it->second;
}

}  // namespace

void GroupDescriptor::validate_family() const {
    const auto& f = family_name_;
    auto check_prime = [&](long v, const std::string& key) {
        if (!is_prime(Integer(v)))
            throw descriptor_error("family " + f + ": parameter '" + key + "' must be prime");
    };
    if (f == "gl_chain" || f == "psl_chain") {
        long ell = require_param(params_, "ell", f);
        check_prime(ell, "ell");
        long a = require_param(params_, "a", f);
        if (a < 1) throw descriptor_error("family " + f + ": need a >= 1");
        long n = param_or(params_, "n", 2);
        if (n < 1 || n > 16) throw descriptor_error("family " + f + ": matrix degree out of range");
    } else if (f == "sz_chain") {
        long a = require_param(params_, "a", f);
        if (a < 1 || a % 2 == 0) throw descriptor_error("family sz_chain: need odd a >= 1");
    } else if (f == "tree_fix") {
        long d = require_param(params_, "d", f);
        if (d < 3) throw descriptor_error("family tree_fix: need d >= 3");
    } else if (f == "prufer") {
        check_prime(require_param(params_, "p", f), "p");
    } else if (f == "z_ell" || f == "q_ell") {
        check_prime(require_param(params_, "ell", f), "ell");
    } else {
        throw descriptor_error("unknown family '" + f + "'");
    }
}

Integer GroupDescriptor::chain_order_at(int k) const {
    if (kind_ != Kind::Family)
        throw precondition_error("chain_order_at: descriptor is not a family");
    const auto& f = family_name_;
    if (f == "gl_chain")
        return gl_order(static_cast<int>(param_or(params_, "n", 2)),
                        chain_field_size(Integer(params_.at("ell")), params_.at("a"), k));
    if (f == "psl_chain")
        return psl_order(static_cast<int>(param_or(params_, "n", 2)),
                         chain_field_size(Integer(params_.at("ell")), params_.at("a"), k));
    if (f == "sz_chain") return sz_order(chain_field_size(Integer(2), params_.at("a"), k));
    if (f == "tree_fix") return tree_ball_order(static_cast<int>(params_.at("d")), k);
    if (f == "prufer") return pow_integer(Integer(params_.at("p")), static_cast<unsigned long>(k));
    if (f == "z_ell") return pow_integer(Integer(params_.at("ell")), static_cast<unsigned long>(k));
    throw precondition_error("chain_order_at: family '" + f + "' has no finite piece orders");
}

ExponentResult GroupDescriptor::family_exponent(long p, int depth) const {
    const auto& f = family_name_;
    auto sampled = [&]() -> ExponentResult {
        long best = 0;
        for (int k = 1; k <= depth; ++k)
            best = std::max(best, padic_valuation(chain_order_at(k), Integer(p)));
        return {best, false};
    };

    if (f == "prufer") {
        if (p == params_.at("p")) return {std::nullopt, true};
        return {0L, true};
    }
    if (f == "z_ell" || f == "q_ell") {
        if (p == params_.at("ell")) return {std::nullopt, true};
        return {0L, true};
    }
    if (f == "tree_fix") {
        // nu_p(d!) drives the first ball; nu_p((d-1)!) drives the growing
        // kernel factors (d-1)!^{|sphere|}.
        long d = params_.at("d");
        if (p > d) return {0L, true};
        if (p == d) return {1L, true};
        return {std::nullopt, true};  // p <= d-1 divides (d-1)!, spheres grow
    }
    if (f == "sz_chain") {
        // |Sz(q)| = (q^2+1) q^2 (q-1), q = 2^(a^k), a odd
        if (p == 2) return {std::nullopt, true};  // nu_2 = 2 a^k
        if (p == 3) {
            // a^k odd, so q = 2^odd = 2 mod 3: q-1 = 1, q^2 = 1, q^2+1 = 2 mod 3
            return {0L, true};
        }
        return sampled();
    }
    if (f == "gl_chain" || f == "psl_chain") {
        const Integer ell(params_.at("ell"));
        const long a = params_.at("a");
        const int n = static_cast<int>(param_or(params_, "n", 2));
        if (p == params_.at("ell"))
            return n >= 2 ? ExponentResult{std::nullopt, true} : ExponentResult{0L, true};
        if (p == 2 && ell % 2 != 0) {
            if (a % 2 == 0) return {std::nullopt, true};  // nu_2(q^t - 1) grows with k
            // a odd: nu_2(q^t - 1) = lte_nu2(ell, t a^k) and nu_2(t a^k) = nu_2(t),
            // so every term is independent of k.
            long total = 0;
            for (int t = 1; t <= n; ++t) total += lte_nu2(ell, Integer(t));
            if (f == "gl_chain") return {total, true};
            long nu_q_minus_1 = lte_nu2(ell, Integer(1));
            long nu_center = std::min<long>(padic_valuation(Integer(n), Integer(2)), nu_q_minus_1);
            return {total - nu_q_minus_1 - nu_center, true};
        }
        return sampled();
    }
    throw descriptor_error("unknown family '" + f + "'");
}

ExponentResult GroupDescriptor::p_exponent(long p, int depth) const {
    if (!is_prime(Integer(p))) throw precondition_error("p_exponent: p must be prime");
    if (depth < 1) throw precondition_error("p_exponent: depth must be >= 1");
    switch (kind_) {
        case Kind::Finite:
        case Kind::Cyclic:
        case Kind::Symmetric:
            return {padic_valuation(order_, Integer(p)), true};
        case Kind::Profinite:
            return stream_->exponent(p, depth);
        case Kind::DirectedUnion: {
            // sup over members; certification additionally needs open members
            long best = 0;
            bool all_certified = true;
            for (const auto& m : children_) {
                auto r = m.p_exponent(p, depth);
                if (r.diverges()) return {std::nullopt, r.certified && open_members_};
                best = std::max(best, *r.value);
                all_certified = all_certified && r.certified;
            }
            return {best, all_certified && open_members_};
        }
        case Kind::Extension:
        case Kind::Product: {
            // exponents add across extensions and finite products
            long total = 0;
            bool all_certified = true;
            for (const auto& m : children_) {
                auto r = m.p_exponent(p, depth);
                if (r.diverges()) return {std::nullopt, r.certified};
                total += *r.value;
                all_certified = all_certified && r.certified;
            }
            return {total, all_certified};
        }
        case Kind::Family:
            return family_exponent(p, depth);
    }
    throw descriptor_error("p_exponent: corrupt descriptor");
}

// ---------------------------------------------------------------------------

namespace {

json integer_to_json(const Integer& n) {
    if (n <= Integer(std::numeric_limits<std::int64_t>::max()))
        return n.convert_to<std::int64_t>();
    return n.str();
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw input_error("descriptor: expected an integer");
}

}  // namespace

json GroupDescriptor::to_json() const {
    json j;
    switch (kind_) {
        case Kind::Finite:
            j["kind"] = "finite";
            j["order"] = integer_to_json(order_);
            break;
        case Kind::Cyclic:
            j["kind"] = "cyclic";
            j["n"] = order_.convert_to<long>();
            break;
        case Kind::Symmetric: {
            j["kind"] = "symmetric";
            int n = 1;
            while (factorial(n) < order_) ++n;
            j["n"] = n;
            break;
        }
        case Kind::Profinite: {
            j["kind"] = "profinite";
            if (!stream_->is_explicit())
                throw input_error("descriptor: formula streams are not serializable");
            json orders = json::array();
            for (const auto& o : stream_->orders()) orders.push_back(integer_to_json(o));
            j["orders"] = std::move(orders);
            j["exhaustive"] = stream_->exhaustive();
            j["quotient_tower"] = stream_->quotient_tower();
            break;
        }
        case Kind::DirectedUnion: {
            j["kind"] = "directed_union";
            j["open_members"] = open_members_;
            json members = json::array();
            for (const auto& m : children_) members.push_back(m.to_json());
            j["members"] = std::move(members);
            break;
        }
        case Kind::Extension:
            j["kind"] = "extension";
            j["kernel"] = children_[0].to_json();
            j["quotient"] = children_[1].to_json();
            break;
        case Kind::Product: {
            j["kind"] = "product";
            json members = json::array();
            for (const auto& m : children_) members.push_back(m.to_json());
            j["members"] = std::move(members);
            break;
        }
        case Kind::Family:
            j["kind"] = "family";
            j["name"] = family_name_;
            j["params"] = params_;
            break;
    }
    return j;
}

GroupDescriptor GroupDescriptor::from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw input_error("descriptor: expected an object with a 'kind' key");
    const std::string kind = j.at("kind").get<std::string>();
    auto members_of = [](const json& doc, const char* key) {
        std::vector<GroupDescriptor> members;
        for (const auto& m : doc.at(key)) members.push_back(from_json(m));
        return members;
    };
    if (kind == "finite") {
        if (j.contains("table")) {
            auto table = j.at("table").get<std::vector<std::vector<int>>>();
            return finite(std::make_shared<FiniteGroup>(FiniteGroup::from_table(table)));
        }
        if (j.contains("generators")) {
            const auto& g = j.at("generators");
            auto perms = g.at("perms").get<std::vector<std::vector<int>>>();
            return finite(std::make_shared<FiniteGroup>(
                FiniteGroup::from_permutation_generators(g.at("degree").get<int>(), perms)));
        }
        return finite(integer_from_json(j.at("order")));
    }
    if (kind == "cyclic") return cyclic(j.at("n").get<long>());
    if (kind == "symmetric") return symmetric(j.at("n").get<int>());
    if (kind == "profinite") {
        std::vector<Integer> orders;
        for (const auto& o : j.at("orders")) orders.push_back(integer_from_json(o));
        return profinite(OrderStream::explicit_orders(std::move(orders),
                                                      j.value("exhaustive", true),
                                                      j.value("quotient_tower", false)));
    }
    if (kind == "directed_union")
        return directed_union(members_of(j, "members"), j.value("open_members", false));
    if (kind == "extension") return extension(from_json(j.at("kernel")), from_json(j.at("quotient")));
    if (kind == "product") return product(members_of(j, "members"));
    if (kind == "family")
        return family(j.at("name").get<std::string>(),
                      j.at("params").get<std::map<std::string, long>>());
    throw input_error("descriptor: unknown kind '" + kind + "'");
}

std::string GroupDescriptor::describe() const {
    switch (kind_) {
        case Kind::Finite: return "finite(" + order_.str() + ")";
        case Kind::Cyclic: return "Z/" + order_.str();
        case Kind::Symmetric: return "symmetric(" + order_.str() + " elements)";
        case Kind::Profinite: return "profinite";
        case Kind::DirectedUnion: {
            std::string s = "union(";
            for (std::size_t i = 0; i < children_.size(); ++i)
                s += (i ? ", " : "") + children_[i].describe();
            return s + ")";
        }
        case Kind::Extension:
            return "extension(" + children_[0].describe() + ", " + children_[1].describe() + ")";
        case Kind::Product: {
            std::string s = "product(";
            for (std::size_t i = 0; i < children_.size(); ++i)
                s += (i ? ", " : "") + children_[i].describe();
            return s + ")";
        }
        case Kind::Family: {
            std::string s = family_name_ + "{";
            bool first = true;
            for (const auto& [k, v] : params_) {
                s += (first ? "" : ",") + k + "=" + std::to_string(v);
                first = false;
            }
            return s + "}";
        }
    }
    return "?";
}

GroupDescriptor descriptor_from_string(const std::string& text) {
    auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

    auto parse_params = [&](std::map<std::string, long> defaults) {
        std::map<std::string, long> params = std::move(defaults);
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw input_error("descriptor '" + text + "': expected key=value, got '" + item + "'");
            const std::string key = item.substr(0, eq);
            const std::string value = item.substr(eq + 1);
            if (key == "a" && value == "odd") {
                params["a"] = 3;
                continue;
            }
            if (key == "q0") continue;  // starting field size; implied by ell
            try {
                params[key] = std::stol(value);
            } catch (const std::exception&) {
                throw input_error("descriptor '" + text + "': bad value '" + value + "'");
            }
        }
        return params;
    };

    try {
        if (head == "prufer") return GroupDescriptor::family("prufer", {{"p", std::stol(rest)}});
        if (head == "z_ell") return GroupDescriptor::family("z_ell", {{"ell", std::stol(rest)}});
        if (head == "q_ell") return GroupDescriptor::family("q_ell", {{"ell", std::stol(rest)}});
        if (head == "tree_fix") {
            if (rest.find('=') == std::string::npos)
                return GroupDescriptor::family("tree_fix", {{"d", std::stol(rest)}});
            return GroupDescriptor::family("tree_fix", parse_params({}));
        }
        if (head == "gl_chain" || head == "psl_chain")
            return GroupDescriptor::family(head, parse_params({{"a", 3}}));
        if (head == "sz_chain") return GroupDescriptor::family("sz_chain", parse_params({{"a", 3}}));
        if (head == "cyclic") return GroupDescriptor::cyclic(std::stol(rest));
        if (head == "symmetric") return GroupDescriptor::symmetric(std::stoi(rest));
        if (head == "finite") {
            if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
                throw input_error("descriptor '" + text + "': order must be a positive integer");
            return GroupDescriptor::finite(Integer(rest));
        }
    } catch (const std::invalid_argument&) {
        throw input_error("descriptor '" + text + "': malformed parameter");
    } catch (const std::out_of_range&) {
        throw input_error("descriptor '" + text + "': parameter out of range");
    }
    throw input_error("descriptor '" + text + "': unknown form");
}

}  // namespace nka
