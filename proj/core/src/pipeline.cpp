#include "mckayq/pipeline.hpp"

#include <json.hpp>

#include <sstream>

namespace mckayq {

using ojson = nlohmann::ordered_json;

namespace {

template <class T>
T get_field(ojson const& j, char const* key, std::string const& where)
{
    if (!j.contains(key)) throw JobParseError(where + ": missing \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (nlohmann::json::exception const& e) {
        throw JobParseError(where + "." + key + ": " + e.what());
    }
}

}  // namespace

JobSpec parse_job(std::string const& text)
{
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
        throw JobParseError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object()) throw JobParseError("job: expected an object");
    JobSpec job;
    job.name = j.value("name", std::string("job"));
    ojson const& f = j.contains("field") ? j.at("field") : throw JobParseError("job: missing \"field\"");
    std::string kind = get_field<std::string>(f, "kind", "field");
    if (kind == "cyclotomic") {
        job.field.kind = FieldKind::Cyclotomic;
        job.field.n = get_field<long>(f, "n", "field");
        if (job.field.n < 1) throw JobParseError("field.n: must be at least 1");
    } else if (kind == "finite") {
        job.field.kind = FieldKind::Finite;
        job.field.p = get_field<long>(f, "p", "field");
        job.field.m = get_field<int>(f, "m", "field");
        if (f.contains("modulus")) job.field.modulus = get_field<std::vector<long>>(f, "modulus", "field");
    } else {
        throw JobParseError("field.kind: expected \"cyclotomic\" or \"finite\", got \"" + kind + "\"");
    }
    job.galois = f.contains("galois") ? get_field<std::vector<long>>(f, "galois", "field")
                                      : std::vector<long>{};
    job.d = get_field<int>(j, "d", "job");
    if (job.d < 2) throw JobParseError("job.d: dimension must be at least 2");
    if (!j.contains("generators") || !j.at("generators").is_array())
        throw JobParseError("job: missing \"generators\" array");
    std::size_t gi = 0;
    for (auto const& g : j.at("generators")) {
        std::string where = "generators[" + std::to_string(gi) + "]";
        GeneratorSpec s;
        s.name = g.value("name", "g" + std::to_string(gi));
        s.aut = g.contains("aut") ? get_field<long>(g, "aut", where) : -1;
        if (!g.contains("matrix") || !g.at("matrix").is_array())
            throw JobParseError(where + ": missing \"matrix\"");
        auto const& m = g.at("matrix");
        if ((int)m.size() != job.d) throw JobParseError(where + ".matrix: expected " + std::to_string(job.d) + " rows");
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (!m[r].is_array() || (int)m[r].size() != job.d)
                throw JobParseError(where + ".matrix[" + std::to_string(r) + "]: expected " +
                                    std::to_string(job.d) + " entries");
            std::vector<std::string> row;
            for (auto const& e : m[r]) {
                if (e.is_string()) row.push_back(e.get<std::string>());
                else if (e.is_number_integer()) row.push_back(std::to_string(e.get<long>()));
                else throw JobParseError(where + ".matrix[" + std::to_string(r) + "]: entries must be strings");
            }
            s.matrix.push_back(std::move(row));
        }
        job.generators.push_back(std::move(s));
        ++gi;
    }
    if (job.generators.empty()) throw JobParseError("job: at least one generator is required");
    if (j.contains("options")) {
        auto const& o = j.at("options");
        if (o.contains("cap")) job.cap = get_field<std::size_t>(o, "cap", "options");
        if (o.contains("saturation"))
            job.skew.saturation_iterations = get_field<int>(o, "saturation", "options");
        if (o.contains("saturation_degree"))
            job.skew.saturation_degree = get_field<long>(o, "saturation_degree", "options");
        if (o.contains("norm_search_bound"))
            job.skew.norm_search_bound = get_field<long>(o, "norm_search_bound", "options");
    }
    return job;
}

std::string job_to_json(JobSpec const& job)
{
    ojson j;
    j["name"] = job.name;
    ojson f;
    if (job.field.kind == FieldKind::Cyclotomic) {
        f["kind"] = "cyclotomic";
        f["n"] = job.field.n;
    } else {
        f["kind"] = "finite";
        f["p"] = job.field.p;
        f["m"] = job.field.m;
        if (!job.field.modulus.empty()) f["modulus"] = job.field.modulus;
    }
    f["galois"] = job.galois;
    j["field"] = f;
    j["d"] = job.d;
    j["generators"] = ojson::array();
    for (auto const& g : job.generators) {
        ojson gj;
        gj["name"] = g.name;
        gj["matrix"] = g.matrix;
        gj["aut"] = g.aut;
        j["generators"].push_back(gj);
    }
    j["options"] = {{"cap", job.cap},
                    {"saturation", job.skew.saturation_iterations},
                    {"saturation_degree", job.skew.saturation_degree},
                    {"norm_search_bound", job.skew.norm_search_bound}};
    return j.dump(2) + "\n";
}

FieldPtr make_field(FieldSpec const& spec)
{
    if (spec.kind == FieldKind::Cyclotomic) return Field::cyclotomic(spec.n);
    return Field::finite(spec.p, spec.m, spec.modulus);
}

std::vector<GroupElement> parse_generators(Field const& f, JobSpec const& job)
{
    std::vector<GroupElement> gens;
    for (std::size_t gi = 0; gi < job.generators.size(); ++gi) {
        auto const& g = job.generators[gi];
        GroupElement e;
        e.aut = g.aut < 0 ? f.aut_identity() : g.aut;
        if (!f.valid_aut(e.aut)) throw JobParseError("generators[" + std::to_string(gi) + "].aut: " +
                                                     InvalidAutomorphism(e.aut).what());
        e.aut = f.aut_normalize(e.aut);
        e.matrix = mat_identity(f, job.d);
        for (int r = 0; r < job.d; ++r)
            for (int c = 0; c < job.d; ++c) {
                try {
                    e.matrix(r, c) = f.parse(g.matrix[r][c]);
                } catch (FieldError const& err) {
                    throw JobParseError("generators[" + std::to_string(gi) + "].matrix[" +
                                        std::to_string(r) + "][" + std::to_string(c) + "] \"" +
                                        g.matrix[r][c] + "\": " + err.what());
                }
            }
        if (f.is_zero(mat_det(f, e.matrix)))
            throw JobParseError("generators[" + std::to_string(gi) + "]: matrix is singular");
        gens.push_back(std::move(e));
    }
    return gens;
}

Report analyze(JobSpec const& job)
{
    Report r;
    r.job = job;
    r.field = make_field(job.field);
    Field const& f = *r.field;
    std::vector<long> galois = job.galois.empty() ? std::vector<long>{f.aut_identity()} : job.galois;
    for (long a : galois)
        if (!f.valid_aut(a)) throw JobParseError("field.galois: " + std::string(InvalidAutomorphism(a).what()));

    r.group = FiniteGroup::generate(r.field, job.d, parse_generators(f, job), job.cap);
    r.kernel = kernel_and_cosets(*r.group, galois);
    FiniteGroup const& G = *r.group;
    Kernel const& K = *r.kernel;

    int pr = find_pseudo_reflection(G, K);
    if (pr >= 0) {
        r.small = false;
        throw SmallnessViolation("H is not small: it contains the pseudo-reflection " +
                                     mat_to_string(f, G.element(K.elems[pr]).matrix),
                                 mat_to_string(f, G.element(K.elems[pr]).matrix));
    }
    r.gorenstein = gorenstein_flag(G, K);
    r.isolated = isolated_flag(G, K);

    r.table = character_table(G, K);
    CharacterTable const& T = *r.table;
    r.skew = compute_orbits(G, K, T);
    solve_multiplicities(*r.skew, G, K, T, job.skew);
    if (r.skew->ambiguous()) return r;
    SkewData const& S = *r.skew;

    r.quiver_h = mckay_H(G, K, T);
    r.quiver = mckay_G(G, K, T, S, *r.quiver_h);
    cross_check_valuations(G, K, T, S, *r.quiver);
    r.sequences = almost_split_sequences(G, K, T, S);
    r.class_group = class_group(S, T);
    r.dynkin = recognize_type(*r.quiver, job.d, r.gorenstein);
    return r;
}

std::string report_json(Report const& r)
{
    ojson j;
    j["schema"] = "mckayq-report/1";
    j["name"] = r.job.name;
    Field const& f = *r.field;
    ojson fj;
    if (f.kind() == FieldKind::Cyclotomic) {
        fj["kind"] = "cyclotomic";
        fj["n"] = f.conductor();
    } else {
        fj["kind"] = "finite";
        fj["p"] = f.characteristic();
        fj["m"] = f.dim();
        std::vector<std::string> mod;
        for (auto const& c : f.modulus()) mod.push_back(c.get_str());
        fj["modulus"] = mod;
    }
    fj["description"] = f.describe();
    if (r.kernel) {
        fj["galois"] = r.kernel->galois;
        fj["degree"] = r.kernel->galois.size();
    }
    j["field"] = fj;
    j["d"] = r.job.d;
    if (r.group) j["group_order"] = r.group->size();
    if (r.kernel) j["kernel_order"] = r.kernel->size();
    j["flags"] = {{"small", r.small}, {"gorenstein", r.gorenstein}, {"isolated", r.isolated}};

    if (r.table) {
        auto const& T = *r.table;
        ojson tj;
        tj["method"] = T.method;
        tj["conductor"] = T.conductor;
        tj["class_sizes"] = T.class_size;
        tj["class_orders"] = T.class_order;
        tj["irreducibles"] = ojson::array();
        for (auto const& chi : T.irr) tj["irreducibles"].push_back(character_strings(T, chi));
        j["character_table"] = tj;
    }
    if (r.skew) {
        j["orbits"] = ojson::array();
        for (auto const& o : r.skew->orbits) {
            ojson oj;
            oj["label"] = o.label;
            oj["members"] = o.members;
            oj["t"] = o.t;
            oj["dim"] = o.dim_w;
            oj["a"] = o.solved() ? ojson(o.a) : ojson(nullptr);
            oj["b"] = o.solved() ? ojson(o.b) : ojson(nullptr);
            oj["candidates"] = o.candidates;
            oj["provenance"] = o.provenance;
            oj["trace"] = o.trace;
            j["orbits"].push_back(oj);
        }
        j["ambiguous"] = r.skew->ambiguous();
    }
    if (r.quiver) {
        auto const& q = *r.quiver;
        j["vertices"] = ojson::array();
        for (auto const& v : q.vertices)
            j["vertices"].push_back({{"label", v.label},
                                     {"rank", v.rank},
                                     {"is_R", v.is_r},
                                     {"is_omega", v.is_omega},
                                     {"is_projective", v.is_projective}});
        j["arrows"] = ojson::array();
        for (auto const& a : q.arrows())
            j["arrows"].push_back({{"src", q.vertices[a.src].label},
                                   {"dst", q.vertices[a.dst].label},
                                   {"d", a.d},
                                   {"d_prime", a.dp}});
        ojson nu = ojson::object();
        for (std::size_t i = 0; i < q.size(); ++i) nu[q.vertices[i].label] = q.vertices[q.nu[i]].label;
        j["nu"] = nu;
        j["omega"] = q.vertices[q.omega].label;
        j["sequences"] = ojson::array();
        for (auto const& s : r.sequences) {
            ojson sj;
            sj["target"] = q.vertices[s.target].label;
            sj["kind"] = s.fundamental ? "fundamental" : "almost_split";
            std::vector<std::string> terms;
            for (std::size_t p = s.terms.size(); p-- > 0;) terms.push_back(term_string(q, s.terms[p]));
            sj["terms"] = terms;
            sj["text"] = sequence_string(q, s);
            j["sequences"].push_back(sj);
        }
    }
    if (r.class_group) {
        ojson cj;
        cj["invariant_factors"] = r.class_group->invariant_factors;
        cj["description"] = r.class_group->describe();
        std::vector<std::string> el;
        for (int e : r.class_group->elements) el.push_back(r.skew->orbits[e].label);
        cj["elements"] = el;
        j["class_group"] = cj;
    }
    j["dynkin_type"] = {{"family", r.dynkin.family},
                        {"n", r.dynkin.n},
                        {"name", r.dynkin.name()},
                        {"reason", r.dynkin.reason}};
    return j.dump(2) + "\n";
}

std::string explain_text(Report const& r)
{
    std::ostringstream os;
    os << r.job.name << ": l = " << r.field->describe();
    if (r.group) os << ", |G| = " << r.group->size();
    if (r.kernel) os << ", |H| = " << r.kernel->size() << ", [l:k] = " << r.kernel->galois.size();
    os << "\n";
    os << "flags: small=" << r.small << " gorenstein=" << r.gorenstein << " isolated=" << r.isolated
       << "\n";
    if (r.table) os << "character table: " << r.table->size() << " irreducibles (" << r.table->method << ")\n";
    if (r.skew) {
        for (auto const& o : r.skew->orbits) {
            os << o.label << ": t=" << o.t << " dim=" << o.dim_w;
            if (o.solved()) os << " a=" << o.a << " b=" << o.b;
            os << " [" << o.provenance << "]\n";
            for (auto const& line : o.trace) os << "  " << line << "\n";
        }
    }
    if (r.quiver) {
        auto const& q = *r.quiver;
        os << "arrows:\n";
        for (auto const& a : q.arrows())
            os << "  " << q.vertices[a.src].label << " -> " << q.vertices[a.dst].label << " (" << a.d
               << "," << a.dp << ")\n";
        os << "omega: " << q.vertices[q.omega].label << "\n";
        os << "sequences:\n";
        for (auto const& s : r.sequences) os << "  " << sequence_string(q, s) << "\n";
    }
    if (r.class_group) os << "class group: " << r.class_group->describe() << "\n";
    os << "type: " << r.dynkin.name();
    if (!r.dynkin.reason.empty()) os << " (" << r.dynkin.reason << ")";
    os << "\n";
    return os.str();
}

}  // namespace mckayq
