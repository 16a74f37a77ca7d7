#include "report.hpp"

#include <cmath>
#include <sstream>

namespace cullen::cli {

namespace {

double log10_of(const BigInt& x)
{
    long exp = 0;
    const double d = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log10(d) + static_cast<double>(exp) * std::log10(2.0);
}

json optional_big(const std::optional<BigInt>& x)
{
    return x ? json(x->get_str()) : json(nullptr);
}

json strings(const std::vector<BigInt>& xs)
{
    json a = json::array();
    for (const auto& x : xs)
        a.push_back(x.get_str());
    return a;
}

std::string certificate_text(const Certificate& c)
{
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(const ProthWitness& w) const { return "proth base " + std::to_string(w.base); }
        std::string operator()(const FactorWitness& w) const { return "factor " + w.factor.get_str(); }
        std::string operator()(const EulerWitness& w) const
        {
            return "euler witness base " + std::to_string(w.base) + " residue " + w.residue.get_str();
        }
        std::string operator()(const MillerRabinWitness& w) const { return "strong witness " + w.base.get_str(); }
        std::string operator()(const DeterministicRegime& r) const { return r.description; }
        std::string operator()(const ProbabilisticRegime& r) const
        {
            return std::to_string(r.rounds) + " Miller-Rabin rounds";
        }
        std::string operator()(BelowTwo) const { return "below 2"; }
    };
    return std::visit(Visitor{}, c);
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + '"';
}

} // namespace

double log10_of(const Rational& q)
{
    return log10_of(BigInt(q.get_num())) - log10_of(BigInt(q.get_den()));
}

std::string decimal(const Rational& q, int digits)
{
    return Interval(q).str(digits);
}

json to_json(const Factorization& f)
{
    json j;
    j["status"] = to_string(f.status);
    j["factors"] = f.summary();
    j["cofactor"] = f.cofactor.get_str();
    j["probable_factors"] = f.has_probable_factor();
    return j;
}

json to_json(const ScanRow& row)
{
    json j;
    j["record"] = "row";
    j["n"] = row.n;
    j["cullen_status"] = row.cullen_status;
    j["verdict"] = row.verdict;
    j["witness"] = row.witness;
    j["witness_cofactor"] = optional_big(row.witness_cofactor);
    j["repeated_prime"] = optional_big(row.repeated_prime);
    j["structured_divisors"] = strings(row.structured_divisors);
    if (row.factorization) {
        j["factorization"] = to_json(*row.factorization);
    } else {
        j["factorization"] = nullptr;
    }
    if (row.ratio) {
        j["phi"] = row.ratio->phi.get_str();
        j["gcd"] = row.ratio->gcd_value.get_str();
        j["ratio"] = to_string(row.ratio->ratio);
        j["ratio_log10"] = log10_of(row.ratio->ratio);
    } else {
        j["ratio"] = "unknown";
    }
    j["carmichael"] = row.carmichael ? json(*row.carmichael) : json("unknown");
    if (row.elapsed_ms)
        j["elapsed_ms"] = *row.elapsed_ms;
    return j;
}

json to_json(const LehmerSearchResult& r)
{
    json j;
    j["n"] = r.n;
    j["value"] = r.cullen.value.get_str();
    j["alpha"] = r.cullen.alpha;
    j["n1"] = r.cullen.n1;
    j["n2"] = r.cullen.n2;
    j["primality"] = to_string(r.primality.status);
    j["certificate"] = certificate_text(r.primality.certificate);
    j["verdict"] = to_string(r.verdict);
    json cands = json::array();
    for (const auto& sp : r.candidates)
        cands.push_back(sp.value.get_str());
    j["candidates"] = cands;
    json divs = json::array();
    for (std::size_t i = 0; i < r.structured_divisors.size(); ++i) {
        const auto& sp = r.structured_divisors[i];
        divs.push_back({{"prime", sp.value.get_str()},
                        {"m", sp.m},
                        {"e", sp.e},
                        {"multiplicity", r.multiplicities[i]}});
    }
    j["structured_divisors"] = divs;
    j["witness"] = {{"cofactor", r.witness.cofactor.get_str()},
                    {"repeated_prime", optional_big(r.witness.repeated_prime)},
                    {"phi", optional_big(r.witness.phi)},
                    {"explanation", r.witness.explanation}};
    return j;
}

json to_json(const PigeonholePair& p)
{
    json j;
    j["n"] = p.n;
    j["np"] = p.np;
    j["grid_side"] = p.grid_side;
    j["u"] = p.u;
    j["v"] = p.v;
    j["combo"] = p.combo;
    j["invariants"] = {{"nonzero", p.nonzero()},
                       {"coprime", p.coprime()},
                       {"u_nonnegative", p.u >= 0},
                       {"within_grid", p.within_grid()},
                       {"combo_bounded", p.combo_bounded()}};
    j["argument_applies"] = p.n >= 30;
    return j;
}

json to_json(const ProductBound& pb)
{
    json j;
    j["cap"] = pb.cap.get_str();
    j["excluded_primes"] = {"2", "3"};
    j["prime_count"] = pb.primes.size();
    j["primes"] = strings(pb.primes);
    j["partial_product"] = to_string(pb.partial_product);
    j["partial_product_decimal"] = decimal(pb.partial_product);
    j["tail_bound"] = to_string(pb.tail_bound);
    j["tail_bound_decimal"] = decimal(pb.tail_bound);
    j["exp_tail_upper_decimal"] = decimal(pb.exp_tail_upper);
    j["total_upper"] = to_string(pb.total_upper);
    j["total_upper_decimal"] = decimal(pb.total_upper);
    j["below_two"] = pb.below_two;
    j["published_constant"] = ProductBound::published_constant;
    j["published_constant_exceeded_at"] = optional_big(pb.published_constant_exceeded_at);
    j["published_constant_discrepancy"] =
        pb.published_constant_exceeded_at
            ? "running product passes the published 1.46 at p = " +
                  pb.published_constant_exceeded_at->get_str() +
                  "; the computed bound is reported instead, and only < 2 is needed"
            : std::string("running product stays below the published 1.46 up to this cap");
    return j;
}

json to_json(const BoundCascade& bc)
{
    json j;
    json stages = json::array();
    json constants = json::array();
    for (const auto& s : bc.stages) {
        json st;
        st["name"] = s.name;
        st["claim"] = s.claim;
        st["passed"] = s.passed;
        st["n_bound_in"] = s.n_bound_in ? json(*s.n_bound_in) : json(nullptr);
        st["k_bound"] = s.k_bound ? json(*s.k_bound) : json(nullptr);
        st["n_bound_out"] = s.n_bound_out ? json(*s.n_bound_out) : json(nullptr);
        st["note"] = s.note;
        json cs = json::array();
        for (const auto& c : s.constants) {
            json cj = {{"name", c.name},
                       {"expression", c.expression},
                       {"value", c.value.str(12)},
                       {"lower", c.value.lower()},
                       {"upper", c.value.upper()}};
            if (c.expected) {
                cj["expected"] = *c.expected;
                cj["matches"] = c.matches;
                constants.push_back({{"name", c.name},
                                     {"value", c.value.str(9)},
                                     {"expected", *c.expected},
                                     {"tolerance", constant_tolerance},
                                     {"matches", c.matches}});
            }
            cs.push_back(cj);
        }
        st["constants"] = cs;
        stages.push_back(st);
    }
    j["stages"] = stages;
    j["constants"] = constants;
    json ext = json::array();
    for (const auto& e : bc.external)
        ext.push_back({{"name", e.name}, {"value", e.value}, {"citation", e.citation}, {"source", "external"}});
    j["external"] = ext;
    j["product"] = to_json(bc.product);
    j["all_passed"] = bc.all_passed;
    j["verdict"] = bc.verdict;
    return j;
}

const std::vector<std::string>& csv_columns()
{
    static const std::vector<std::string> cols = {
        "n", "cullen_status", "verdict", "witness_cofactor", "repeated_prime", "structured_divisors",
        "factor_status", "factors", "cofactor", "probable_factors", "ratio", "ratio_log10", "carmichael"};
    return cols;
}

std::string csv_row(const ScanRow& row)
{
    std::ostringstream os;
    auto big = [](const std::optional<BigInt>& x) { return x ? x->get_str() : std::string(); };
    std::string divs;
    for (const auto& d : row.structured_divisors)
        divs += (divs.empty() ? "" : " ") + d.get_str();
    os << row.n << ',' << row.cullen_status << ',' << row.verdict << ',' << big(row.witness_cofactor) << ','
       << big(row.repeated_prime) << ',' << csv_escape(divs) << ',';
    if (row.factorization) {
        os << to_string(row.factorization->status) << ',' << csv_escape(row.factorization->summary()) << ','
           << row.factorization->cofactor.get_str() << ','
           << (row.factorization->has_probable_factor() ? "true" : "false") << ',';
    } else {
        os << "skipped,,,,";
    }
    if (row.ratio) {
        std::ostringstream l;
        l.precision(10);
        l << log10_of(row.ratio->ratio);
        os << to_string(row.ratio->ratio) << ',' << l.str() << ',';
    } else {
        os << "unknown,,";
    }
    os << (row.carmichael ? (*row.carmichael ? "true" : "false") : "unknown");
    if (row.elapsed_ms)
        os << ',' << *row.elapsed_ms;
    return os.str();
}

void RatioSummary::add(const ScanRow& row)
{
    ++rows;
    if (row.verdict != "unknown" && row.verdict != "prime")
        ++lehmer_refuted;
    if (row.cullen_status == "prime") {
        ++prime_rows;
        return;
    }
    if (!row.ratio) {
        ++unfactored;
        return;
    }
    ++composite_factored;
    if (row.carmichael && *row.carmichael)
        ++carmichael;
    const Rational& r = row.ratio->ratio;
    if (!min || r < *min)
        min = r;
    if (!max || r > *max)
        max = r;
    sum += r;
}

json RatioSummary::to_json(const std::string& command) const
{
    json j;
    j["record"] = "summary";
    j["command"] = command;
    j["rows"] = rows;
    j["prime_rows"] = prime_rows;
    j["refuted_rows"] = lehmer_refuted;
    j["lehmer_rows"] = 0;
    j["composite_factored"] = composite_factored;
    j["unfactored"] = unfactored;
    j["carmichael"] = carmichael;
    if (composite_factored) {
        Rational mean = sum / Rational(big_from_u64(composite_factored));
        mean.canonicalize();
        j["ratio_min"] = cullen::to_string(*min);
        j["ratio_max"] = cullen::to_string(*max);
        j["ratio_mean"] = cullen::to_string(mean);
        j["ratio_min_log10"] = log10_of(*min);
        j["ratio_max_log10"] = log10_of(*max);
        j["ratio_mean_log10"] = log10_of(mean);
    } else {
        j["ratio_min"] = j["ratio_max"] = j["ratio_mean"] = nullptr;
    }
    return j;
}

} // namespace cullen::cli
