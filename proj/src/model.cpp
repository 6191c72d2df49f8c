#include "cpngenus/model.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace cpngenus {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::vector<Integer> standard_pontrjagin(unsigned n) {
    if (n < 1) {
        throw std::invalid_argument("standard_pontrjagin: dimension must be >= 1");
    }
    std::vector<Integer> q;
    for (unsigned i = 1; 2 * i <= n; ++i) {
        q.push_back(binomial(n + 1, i));
    }
    return q;
}

std::vector<Integer> standard_chern(unsigned n) {
    if (n < 1) {
        throw std::invalid_argument("standard_chern: dimension must be >= 1");
    }
    std::vector<Integer> a;
    for (unsigned i = 1; i <= n; ++i) {
        a.push_back(binomial(n + 1, i));
    }
    return a;
}

std::vector<Integer> chern_to_pontrjagin(const std::vector<Integer>& chern, unsigned n) {
    if (chern.size() != n) {
        throw std::invalid_argument("chern_to_pontrjagin: expected a Chern vector of length " +
                                    std::to_string(n));
    }
    const auto c = [&](unsigned i) -> Integer {
        if (i == 0) {
            return 1;
        }
        return i <= n ? chern[i - 1] : Integer(0);
    };
    std::vector<Integer> p;
    for (unsigned i = 1; 2 * i <= n; ++i) {
        Integer acc = 0;
        for (unsigned b = 0; b <= 2 * i; ++b) {
            const unsigned a = 2 * i - b;
            const Integer term = c(a) * c(b);
            acc += ((i + b) % 2 == 0) ? term : -term;
        }
        p.push_back(acc);
    }
    return p;
}

Integer euler_characteristic(unsigned n) {
    if (n < 1) {
        throw std::invalid_argument("euler_characteristic: dimension must be >= 1");
    }
    return Integer(n) + 1;
}

CPnModel::CPnModel(unsigned n_, Integer k_, std::vector<Integer> pontrjagin_,
                   std::optional<std::vector<Integer>> chern_, bool simply_connected_,
                   bool kaehler_, HodgeTable hodge_)
    : n(n_),
      k(std::move(k_)),
      pontrjagin(std::move(pontrjagin_)),
      chern(std::move(chern_)),
      simply_connected(simply_connected_),
      kaehler(kaehler_),
      hodge(std::move(hodge_)) {
    if (n < 1) {
        throw std::invalid_argument("CPnModel: dimension must be >= 1");
    }
    if (pontrjagin.size() != n / 2) {
        throw std::invalid_argument("CPnModel: expected " + std::to_string(n / 2) +
                                    " Pontrjagin multipliers");
    }
    if (hodge.dimension() != n) {
        throw std::invalid_argument("CPnModel: Hodge table dimension mismatch");
    }
    if (chern.has_value()) {
        if (chern->size() != n) {
            throw std::invalid_argument("CPnModel: expected " + std::to_string(n) +
                                        " Chern multipliers");
        }
        if ((*chern)[0] != k) {
            throw std::invalid_argument("CPnModel: Chern vector starts with " +
                                        (*chern)[0].str() + " but c1 multiplier is " + k.str());
        }
        if (chern_to_pontrjagin(*chern, n) != pontrjagin) {
            throw std::invalid_argument(
                "CPnModel: Chern vector does not induce the stated Pontrjagin classes");
        }
    }
}

CPnModel CPnModel::standard(unsigned n, bool simply_connected) {
    return CPnModel(n, Integer(n) + 1, standard_pontrjagin(n), standard_chern(n),
                    simply_connected, true, infer_hodge(n));
}

bool CPnModel::operator==(const CPnModel& o) const {
    return n == o.n && k == o.k && pontrjagin == o.pontrjagin && chern == o.chern &&
           simply_connected == o.simply_connected && kaehler == o.kaehler && hodge == o.hodge;
}

std::string model_to_json(const CPnModel& model) {
    ordered_json j;
    j["n"] = model.n;
    j["k"] = model.k.str();
    ordered_json pont = ordered_json::array();
    for (const auto& q : model.pontrjagin) {
        pont.push_back(q.str());
    }
    j["pontrjagin"] = std::move(pont);
    if (model.chern.has_value()) {
        ordered_json ch = ordered_json::array();
        for (const auto& a : *model.chern) {
            ch.push_back(a.str());
        }
        j["chern_opt"] = std::move(ch);
    } else {
        j["chern_opt"] = nullptr;
    }
    j["simply_connected"] = model.simply_connected;
    j["kaehler"] = model.kaehler;
    ordered_json rows = ordered_json::array();
    for (unsigned p = 0; p <= model.n; ++p) {
        ordered_json row = ordered_json::array();
        for (unsigned q = 0; q <= model.n; ++q) {
            row.push_back(model.hodge.h(p, q).str());
        }
        rows.push_back(std::move(row));
    }
    j["hodge"] = std::move(rows);
    return j.dump(2);
}

CPnModel model_from_json(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    const unsigned n = j.at("n").get<unsigned>();
    const Integer k = integer_from_string(j.at("k").get<std::string>());
    std::vector<Integer> pont;
    for (const auto& q : j.at("pontrjagin")) {
        pont.push_back(integer_from_string(q.get<std::string>()));
    }
    std::optional<std::vector<Integer>> chern;
    if (!j.at("chern_opt").is_null()) {
        std::vector<Integer> ch;
        for (const auto& a : j.at("chern_opt")) {
            ch.push_back(integer_from_string(a.get<std::string>()));
        }
        chern = std::move(ch);
    }
    std::vector<std::vector<Integer>> rows;
    for (const auto& row : j.at("hodge")) {
        std::vector<Integer> r;
        for (const auto& v : row) {
            r.push_back(integer_from_string(v.get<std::string>()));
        }
        rows.push_back(std::move(r));
    }
    return CPnModel(n, k, std::move(pont), std::move(chern), j.at("simply_connected").get<bool>(),
                    j.at("kaehler").get<bool>(), HodgeTable(n, std::move(rows)));
}

}  // namespace cpngenus
