#include "hilbcells/json_io.hpp"
#include "hilbcells/errors.hpp"

namespace hilbcells {

std::string rational_to_string(const Q& q)
{
    Q c = q;
    c.canonicalize();
    return c.get_str();
}

Q rational_from_string(const std::string& s)
{
    Q q;
    if (s.empty() || q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0)
        fail("ShapeMismatch", "cannot read rational '" + s + "'");
    q.canonicalize();
    return q;
}

namespace {

Q rational_from(const json& j)
{
    if (j.is_number_integer())
        return Q(j.get<long>());
    if (!j.is_string())
        fail("ShapeMismatch", "rationals are written as \"p/q\" strings");
    return rational_from_string(j.get<std::string>());
}

std::vector<int> ints_from(const json& j)
{
    if (!j.is_array())
        fail("ShapeMismatch", "expected an array of integers");
    std::vector<int> v;
    for (auto& e : j) {
        if (!e.is_number_integer())
            fail("ShapeMismatch", "expected an array of integers");
        v.push_back(e.get<int>());
    }
    return v;
}

} // namespace

json to_json(const Partition& p)
{
    json a = json::array();
    for (int x : p)
        a.push_back(x);
    return a;
}

Partition partition_from_json(const json& j)
{
    Partition p = ints_from(j);
    if (!is_partition(p))
        fail("MalformedE", "not a partition: " + to_string(p));
    return p;
}

json to_json(const HilbertFunction& T)
{
    json a = json::array();
    for (int x : T.t)
        a.push_back(x);
    return a;
}

HilbertFunction hilbert_from_json(const json& j)
{
    return HilbertFunction{ints_from(j)};
}

json to_json(const HookCode& d)
{
    json qs = json::array();
    for (auto& q : d.qs)
        qs.push_back(to_json(q));
    return json{{"mu", d.mu}, {"j", d.j}, {"qs", qs}};
}

HookCode hookcode_from_json(const json& j)
{
    HookCode d;
    d.mu = j.at("mu").get<int>();
    d.j = j.at("j").get<int>();
    for (auto& q : j.at("qs"))
        d.qs.push_back(ints_from(q));
    return d;
}

json to_json(const BinaryForm& f)
{
    json cs = json::array();
    for (auto& c : f.coeffs)
        cs.push_back(rational_to_string(c));
    return json{{"degree", f.degree}, {"coeffs", cs}};
}

BinaryForm form_from_json(const json& j)
{
    std::vector<Q> cs;
    for (auto& e : j.at("coeffs"))
        cs.push_back(rational_from(e));
    return make_form(j.at("degree").get<int>(), std::move(cs));
}

json to_json(const FormSpace& v)
{
    json rows = json::array();
    for (auto& r : v.basis) {
        json row = json::array();
        for (auto& c : r)
            row.push_back(rational_to_string(c));
        rows.push_back(row);
    }
    return json{{"degree", v.degree}, {"basis", rows}};
}

FormSpace space_from_json(const json& j)
{
    int degree = j.at("degree").get<int>();
    Matrix rows;
    for (auto& r : j.at("basis")) {
        Row row;
        for (auto& e : r)
            row.push_back(rational_from(e));
        rows.push_back(std::move(row));
    }
    return make_space(degree, rows);
}

json to_json(const CellParams& c)
{
    json ps = json::array();
    for (auto& [pr, v] : c.values)
        ps.push_back(json{{"mu", to_string(pr.mu)}, {"nu", to_string(pr.nu)}, {"value", rational_to_string(v)}});
    return json{{"partition", to_json(c.partition)}, {"params", ps}};
}

CellParams params_from_json(const json& j)
{
    CellParams c;
    c.partition = partition_from_json(j.at("partition"));
    for (auto& e : j.at("params")) {
        MonomialPair pr{parse_monomial(e.at("mu").get<std::string>()), parse_monomial(e.at("nu").get<std::string>())};
        c.values[pr] = rational_from(e.at("value"));
    }
    return c;
}

json to_json(const SchubertClass& s)
{
    json ts = json::array();
    for (auto& [p, c] : s.terms)
        ts.push_back(json{{"partition", to_json(p)}, {"coeff", c}});
    return json{{"box", {s.rows, s.cols}}, {"terms", ts}};
}

SchubertClass schubert_from_json(const json& j)
{
    SchubertClass s;
    auto box = ints_from(j.at("box"));
    if (box.size() != 2)
        fail("ShapeMismatch", "box must be [rows, cols]");
    s.rows = box[0];
    s.cols = box[1];
    for (auto& t : j.at("terms")) {
        Partition p = normalized(ints_from(t.at("partition")));
        if (!fits_box(p, s.rows, s.cols))
            fail("BoxMismatch", "partition outside the box");
        long long c = t.at("coeff").get<long long>();
        if (c != 0)
            s.terms[p] += c;
    }
    return s;
}

json to_json(const TClass& c)
{
    json ts = json::array();
    for (auto& [ab, k] : c.terms)
        ts.push_back(json{{"a", ab.first}, {"b", ab.second}, {"coeff", k}});
    return json{{"mu", c.mu}, {"j", c.j}, {"terms", ts}};
}

TClass tclass_from_json(const json& j)
{
    TClass c{j.at("mu").get<int>(), j.at("j").get<int>(), {}};
    for (auto& t : j.at("terms")) {
        int a = t.at("a").get<int>(), b = t.at("b").get<int>();
        if (!in_range(c.mu, a, b))
            fail("OutOfRange", "class index outside the range");
        c.add(a, b, t.at("coeff").get<long long>());
    }
    return c;
}

std::vector<MonomialSpace> conditions_from_json(const json& j, int degree)
{
    const json& arr = j.is_object() ? j.at("conditions") : j;
    std::vector<MonomialSpace> out;
    for (auto& e : arr)
        out.push_back(MonomialSpace{degree, ints_from(e)});
    return out;
}

} // namespace hilbcells
