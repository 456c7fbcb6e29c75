#include "chainsim/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace chainsim {

namespace {

double chain_hopping(const ChainConfig& c) {
    return c.hopping ? *c.hopping
                     : dipole_shift(c.geometry.spacing, c.geometry.dipole_angle, c.decay_rate);
}

std::vector<double> index_column(int n, int first = 1) {
    std::vector<double> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = first + i;
    return out;
}

Json packet_json(const WavepacketSpec& p) {
    return {{"center", p.center},
            {"width", p.width},
            {"quasimomentum", p.quasimomentum},
            {"drive_amplitude", p.drive_amplitude},
            {"pulse_duration", p.pulse_duration}};
}

}  // namespace

// Free-space figures ---------------------------------------------------------

Table dispersion_table(const DispersionFigure& fig) {
    const ModeBasis basis = mode_basis(fig.sites, Boundary::open);
    const RVector energy = dispersion(basis, 0.0, fig.hopping);
    const double q0 = fig.quasimomentum;

    std::vector<double> k(fig.sites), q(fig.sites), taylor(fig.sites);
    for (int c = 0; c < fig.sites; ++c) {
        k[c] = basis.mode(c);
        q[c] = basis.quasimomentum(c);
        const double dq = q[c] - q0;
        taylor[c] = 2.0 * fig.hopping *
                    (std::cos(q0) - std::sin(q0) * dq - 0.5 * std::cos(q0) * dq * dq);
    }
    Table t;
    t.add("k", k);
    t.add("q", q);
    t.add("energy", energy);
    t.add("taylor", taylor);
    for (double w : fig.widths) {
        WavepacketSpec spec;
        spec.center = 0.5 * (fig.sites + 1);
        spec.width = w;
        spec.quasimomentum = q0;
        char name[48];
        std::snprintf(name, sizeof name, "occupancy_w%g", w);
        t.add(name, collective_occupancy(spec, basis).occupancy);
    }
    return t;
}

RatesResult collective_rate_figure(const RatesFigure& fig) {
    const auto rates_at = [&](double spacing) {
        EmitterGeometry g{fig.sites, spacing, fig.dipole_angle, fig.boundary};
        const RMatrix gamma =
            build_coupling_matrices(g, Truncation::nearest_neighbor, DecayModel::collective).gamma;
        return collective_rates(mode_basis(fig.sites, fig.boundary), gamma);
    };
    RatesResult out;
    const ModeBasis basis = mode_basis(fig.sites, fig.boundary);
    const RVector rates = rates_at(fig.spacing);
    std::vector<double> k(fig.sites), q(fig.sites);
    for (int c = 0; c < fig.sites; ++c) {
        k[c] = basis.mode(c);
        q[c] = basis.quasimomentum(c);
    }
    out.rates.add("k", k);
    out.rates.add("q", q);
    out.rates.add("rate", rates);
    out.fraction_at_spacing = superradiant_fraction(rates);

    std::vector<double> fractions;
    for (double a : fig.spacings) fractions.push_back(superradiant_fraction(rates_at(a)));
    out.fraction.add("spacing", fig.spacings);
    out.fraction.add("superradiant_fraction", fractions);
    return out;
}

SubradianceResult subradiance_figure(const SubradianceFigure& fig) {
    const auto run = [&](double q0, DecayModel model) {
        ChainConfig c;
        c.geometry = {fig.sites, fig.spacing, fig.dipole_angle, Boundary::open};
        c.decay_model = model;
        WavepacketSpec p;
        p.center = fig.center;
        p.width = fig.width;
        p.quasimomentum = q0;
        const std::vector<double> times{fig.time};
        const TransportResult r = run_transport(c, p, times);
        return RVector(r.populations.row(0).transpose());
    };
    SubradianceResult out;
    out.zero_independent = run(0.0, DecayModel::independent);
    out.zero_collective = run(0.0, DecayModel::collective);
    out.pi_independent = run(pi, DecayModel::independent);
    out.pi_collective = run(pi, DecayModel::collective);
    return out;
}

Table heatmap_table(const std::vector<double>& times, const RMatrix& populations, bool with_photon) {
    Table t;
    t.add("t", times);
    const int sites = static_cast<int>(populations.cols()) - (with_photon ? 1 : 0);
    for (int j = 0; j < sites; ++j) t.add("p" + std::to_string(j + 1), RVector(populations.col(j)));
    if (with_photon) t.add("photon", RVector(populations.col(sites)));
    return t;
}

std::array<Table, 2> packet_figure(const PacketFigure& fig) {
    std::array<Table, 2> out;
    const std::vector<double> times = fig.time.values();
    for (int m = 0; m < 2; ++m) {
        ChainConfig c;
        c.geometry = {fig.sites, fig.spacing, fig.dipole_angle, Boundary::open};
        c.decay_model = m ? DecayModel::collective : DecayModel::independent;
        out[m] = heatmap_table(times, run_transport(c, fig.packet, times).populations);
    }
    return out;
}

// Cavity figures -------------------------------------------------------------

double CavityScenario::omega() const {
    return unit ? *unit : dipole_shift(spacing, dipole_angle, 1.0);
}

double CavityScenario::junction() const {
    return junction_hopping ? *junction_hopping : island_hopping * std::sqrt(2.0 * cavity_sites);
}

double CavityScenario::island_detuning(CouplingSymmetry symmetry) const {
    const CouplingSymmetry target =
        detuning == DetuningChoice::asymmetric ? CouplingSymmetry::asymmetric : symmetry;
    return omega() * matched_detuning(coupling, cavity_sites, cavity_hopping, target,
                                      PolaritonBranch::upper);
}

ChainConfig CavityScenario::free_chain() const {
    const double u = omega();
    ChainConfig c;
    c.geometry = {sites(), spacing, dipole_angle, Boundary::open};
    c.hopping = island_hopping * u;
    c.decay_model = decay_model;
    c.island_sites = island_sites;
    c.cavity_sites = cavity_sites;
    c.cavity_hopping = cavity_hopping * u;
    return c;
}

ChainConfig CavityScenario::cavity_chain(CouplingSymmetry symmetry) const {
    ChainConfig c = free_chain();
    c.junction_hopping = junction() * omega();
    c.island_detuning = island_detuning(symmetry);
    c.cavity = CavityMode{0.0, cavity_loss, coupling_pattern(coupling * omega(), cavity_sites, symmetry)};
    return c;
}

DisorderSpec CavityScenario::disorder_in_gamma() const {
    DisorderSpec d = disorder;
    d.width *= omega();
    return d;
}

CouplingComparison coupling_comparison(const CavityScenario& sc) {
    const std::vector<double> times = sc.time.values();
    return {run_transport(sc.cavity_chain(CouplingSymmetry::symmetric), sc.packet, times),
            run_transport(sc.cavity_chain(CouplingSymmetry::asymmetric), sc.packet, times)};
}

FreeSpaceComparison free_space_vs_cavity(const CavityScenario& sc) {
    const std::vector<double> times = sc.time.values();
    return {run_transport(sc.cavity_chain(CouplingSymmetry::asymmetric), sc.packet, times),
            run_transport(sc.free_chain(), sc.packet, times)};
}

DisorderComparison disorder_comparison(const CavityScenario& sc, Execution execution) {
    const std::vector<double> times = sc.time.values();
    const DisorderSpec d = sc.disorder_in_gamma();
    DisorderComparison out;
    out.clean = free_space_vs_cavity(sc);
    out.cavity = disorder_ensemble(sc.cavity_chain(CouplingSymmetry::asymmetric), sc.packet, d, times,
                                   execution);
    out.free = disorder_ensemble(sc.free_chain(), sc.packet, d, times, execution);
    return out;
}

PolaritonDisorder polariton_disorder(const CavityScenario& sc) {
    const int n = sc.cavity_sites;
    const double u = sc.omega();
    const std::vector<double> g = coupling_pattern(sc.coupling * u, n, CouplingSymmetry::asymmetric);
    CounterRng rng(sc.disorder.seed, 0);
    const std::vector<double> delta =
        draw_detunings(rng, n, sc.disorder.distribution, sc.disorder.width * u);

    PolaritonDisorder out;
    out.clean = numeric_eigensystem(
        tavis_cummings_hamiltonian(n, sc.cavity_hopping * u, 0.0, 0.0, g, Boundary::open));
    out.disordered = numeric_eigensystem(
        tavis_cummings_hamiltonian(n, sc.cavity_hopping * u, 0.0, 0.0, g, Boundary::open, delta));
    out.collective_coupling = sc.coupling * u * std::sqrt(static_cast<double>(n));

    // Polaritons sit at the two ends of the sorted spectrum.
    const RVector shift = (out.disordered.energies - out.clean.energies).cwiseAbs();
    out.max_polariton_shift = std::max(shift(0), shift(n));
    out.max_dark_shift = n > 1 ? shift.segment(1, n - 1).maxCoeff() : 0.0;
    return out;
}

// Drivers ----------------------------------------------------------------------

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names{"fig3a", "fig3b", "fig3c", "fig3d",
                                                "fig4a", "fig4b", "fig4c", "fig4d"};
    return names;
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"couplings", "spectrum",   "evolve",       "wavepacket",
                                                "concurrence", "polaritons", "transmission"};
    return names;
}

CavityScenario parse_cavity_scenario(Section& s) {
    CavityScenario sc;
    sc.island_sites = s.integer("island_sites", sc.island_sites);
    sc.cavity_sites = s.integer("cavity_sites", sc.cavity_sites);
    sc.spacing = s.number("spacing", sc.spacing);
    sc.dipole_angle = s.number("dipole_angle", sc.dipole_angle);
    sc.unit = s.optional_number("unit");
    sc.island_hopping = s.number("island_hopping", sc.island_hopping);
    sc.cavity_hopping = s.number("cavity_hopping", sc.cavity_hopping);
    sc.junction_hopping = s.optional_number("junction_hopping");
    sc.coupling = s.number("coupling", sc.coupling);
    sc.cavity_loss = s.number("cavity_loss", sc.cavity_loss);
    const std::string det = s.text("detuning", "matched");
    if (det == "matched") {
        sc.detuning = DetuningChoice::matched;
    } else if (det == "asymmetric") {
        sc.detuning = DetuningChoice::asymmetric;
    } else {
        throw ConfigError(s.field("detuning"), "unknown value '" + det + "' (expected matched or asymmetric)");
    }
    sc.decay_model = parse_decay_model(s.text("decay_model", "collective"), s.field("decay_model"));
    if (auto p = s.child("packet")) sc.packet = parse_packet(*p, sc.packet);
    if (auto t = s.child("time")) sc.time = parse_time(*t, sc.time);
    if (auto d = s.child("disorder")) sc.disorder = parse_disorder(*d, sc.disorder);
    s.finish();

    if (sc.island_sites < 1) throw ConfigError(s.field("island_sites"), "must be at least 1");
    if (sc.cavity_sites < 2) throw ConfigError(s.field("cavity_sites"), "must be at least 2");
    if (sc.cavity_sites % 2) throw ConfigError(s.field("cavity_sites"), "alternating couplings need an even count");
    if (!(sc.coupling > 0.0)) throw ConfigError(s.field("coupling"), "must be positive");
    if (!(sc.cavity_loss >= 0.0)) throw ConfigError(s.field("cavity_loss"), "must be non-negative");
    if (sc.unit && !(*sc.unit > 0.0)) throw ConfigError(s.field("unit"), "must be positive");
    return sc;
}

namespace {

Json cavity_json(const CavityScenario& sc) {
    return {{"island_sites", sc.island_sites},
            {"cavity_sites", sc.cavity_sites},
            {"spacing", sc.spacing},
            {"omega", sc.omega()},
            {"island_hopping", sc.island_hopping},
            {"cavity_hopping", sc.cavity_hopping},
            {"junction_hopping", sc.junction()},
            {"coupling", sc.coupling},
            {"cavity_loss", sc.cavity_loss},
            {"detuning_symmetric", sc.island_detuning(CouplingSymmetry::symmetric) / sc.omega()},
            {"detuning_asymmetric", sc.island_detuning(CouplingSymmetry::asymmetric) / sc.omega()},
            {"decay_model", to_string(sc.decay_model)},
            {"packet", packet_json(sc.packet)},
            {"disorder",
             {{"width", sc.disorder.width},
              {"realizations", sc.disorder.realizations},
              {"seed", sc.disorder.seed},
              {"distribution",
               sc.disorder.distribution == DisorderDistribution::uniform ? "uniform" : "gaussian"}}}};
}

double peak(const RVector& v, int& at) {
    Eigen::Index i = 0;
    const double p = v.maxCoeff(&i);
    at = static_cast<int>(i);
    return p;
}

Table realization_table(const EnsembleResult& e) {
    Table t;
    t.add("t", e.times);
    for (int r = 0; r < e.realizations.rows(); ++r) {
        char name[16];
        std::snprintf(name, sizeof name, "r%03d", r);
        t.add(name, RVector(e.realizations.row(r).transpose()));
    }
    return t;
}

struct Writer {
    std::filesystem::path dir;
    Provenance prov;
    CommandResult result;

    void operator()(const std::string& stem, const Table& table) {
        result.files.push_back(write_result(dir, stem, table, prov));
    }
};

}  // namespace

CommandResult run_figure(const std::string& name, const Json& config,
                         const std::filesystem::path& out_dir) {
    if (std::find(figure_names().begin(), figure_names().end(), name) == figure_names().end()) {
        throw ConfigError("figure", "unknown figure '" + name + "'");
    }
    Section root(config, "");
    const std::string declared = root.text("figure", name);
    if (declared != name) {
        throw ConfigError("figure", "config is for '" + declared + "', not '" + name + "'");
    }
    const Json empty = Json::object();
    Section params(root.has("parameters") ? root.raw("parameters") : empty, "parameters");
    root.finish();

    Writer write{out_dir, {"figure " + name, "expm", config}, {}};
    Json& summary = write.result.summary;

    if (name == "fig3a") {
        DispersionFigure fig;
        fig.sites = params.integer("sites", fig.sites);
        fig.hopping = params.number("hopping", fig.hopping);
        fig.quasimomentum = params.number("quasimomentum", fig.quasimomentum);
        if (params.has("widths")) fig.widths = params.numbers("widths");
        params.finish();
        write.prov.method = "analytic";
        write("fig3a_dispersion", dispersion_table(fig));
    } else if (name == "fig3b") {
        RatesFigure fig;
        fig.sites = params.integer("sites", fig.sites);
        fig.spacing = params.number("spacing", fig.spacing);
        fig.dipole_angle = params.number("dipole_angle", fig.dipole_angle);
        fig.boundary = parse_boundary(params.text("boundary", "open"), params.field("boundary"));
        if (params.has("spacings")) fig.spacings = params.numbers("spacings");
        params.finish();
        const RatesResult r = collective_rate_figure(fig);
        summary["superradiant_fraction"] = r.fraction_at_spacing;
        write.prov.method = "analytic";
        write.prov.extra["summary"] = summary;
        write("fig3b_rates", r.rates);
        write("fig3b_fraction", r.fraction);
    } else if (name == "fig3c") {
        SubradianceFigure fig;
        fig.sites = params.integer("sites", fig.sites);
        fig.spacing = params.number("spacing", fig.spacing);
        fig.dipole_angle = params.number("dipole_angle", fig.dipole_angle);
        fig.width = params.number("width", fig.width);
        fig.center = params.number("center", fig.center);
        fig.time = params.number("time", fig.time);
        params.finish();
        const SubradianceResult r = subradiance_figure(fig);
        summary["survival"] = {{"q0_zero_independent", r.zero_independent.sum()},
                               {"q0_zero_collective", r.zero_collective.sum()},
                               {"q0_pi_independent", r.pi_independent.sum()},
                               {"q0_pi_collective", r.pi_collective.sum()}};
        write.prov.extra["summary"] = summary;
        Table t;
        t.add("site", index_column(fig.sites));
        t.add("q0_zero_independent", r.zero_independent);
        t.add("q0_zero_collective", r.zero_collective);
        t.add("q0_pi_independent", r.pi_independent);
        t.add("q0_pi_collective", r.pi_collective);
        write("fig3c_snapshots", t);
    } else if (name == "fig3d") {
        PacketFigure fig;
        fig.sites = params.integer("sites", fig.sites);
        fig.spacing = params.number("spacing", fig.spacing);
        fig.dipole_angle = params.number("dipole_angle", fig.dipole_angle);
        if (auto p = params.child("packet")) fig.packet = parse_packet(*p, fig.packet);
        if (auto t = params.child("time")) fig.time = parse_time(*t, fig.time);
        params.finish();
        const auto maps = packet_figure(fig);
        write("fig3d_independent", maps[0]);
        write("fig3d_collective", maps[1]);
    } else {
        const CavityScenario sc = parse_cavity_scenario(params);
        write.prov.extra["scenario"] = cavity_json(sc);
        if (name == "fig4a") {
            const CouplingComparison r = coupling_comparison(sc);
            int is = 0, ia = 0;
            summary["peak_symmetric"] = peak(r.symmetric.transmission, is);
            summary["peak_asymmetric"] = peak(r.asymmetric.transmission, ia);
            summary["peak_time_symmetric"] = r.symmetric.times[is];
            summary["peak_time_asymmetric"] = r.asymmetric.times[ia];
            write.prov.extra["summary"] = summary;
            Table t;
            t.add("t", r.symmetric.times);
            t.add("transmission_symmetric", r.symmetric.transmission);
            t.add("transmission_asymmetric", r.asymmetric.transmission);
            write("fig4a_transmission", t);
        } else if (name == "fig4b") {
            const PolaritonDisorder r = polariton_disorder(sc);
            summary["max_dark_shift"] = r.max_dark_shift / sc.omega();
            summary["max_polariton_shift"] = r.max_polariton_shift / r.collective_coupling;
            write.prov.method = "jacobi";
            write.prov.extra["summary"] = summary;
            for (int d = 0; d < 2; ++d) {
                const PolaritonSpectrum& s = d ? r.disordered : r.clean;
                Table t;
                t.add("n", index_column(static_cast<int>(s.energies.size())));
                t.add("eigenvalue", RVector(s.energies / sc.omega()));
                t.add("photon_fraction", s.photon_fraction);
                write(d ? "fig4b_disordered" : "fig4b_clean", t);
            }
        } else if (name == "fig4c") {
            const DisorderComparison r = disorder_comparison(sc);
            int ic = 0, iff = 0;
            const double pc = peak(r.clean.cavity.transmission, ic);
            const double pf = peak(r.clean.free.transmission, iff);
            summary["cavity_clean_peak"] = pc;
            summary["cavity_clean_peak_time"] = r.clean.cavity.times[ic];
            summary["cavity_disordered_at_peak"] = r.cavity.mean(ic);
            summary["free_clean_peak"] = pf;
            summary["free_clean_peak_time"] = r.clean.free.times[iff];
            summary["free_disordered_at_peak"] = r.free.mean(iff);
            write.prov.extra["summary"] = summary;
            Table t;
            t.add("t", r.cavity.times);
            t.add("cavity_clean", r.clean.cavity.transmission);
            t.add("cavity_disordered_mean", r.cavity.mean);
            t.add("cavity_disordered_sem", r.cavity.standard_error);
            t.add("free_clean", r.clean.free.transmission);
            t.add("free_disordered_mean", r.free.mean);
            t.add("free_disordered_sem", r.free.standard_error);
            write("fig4c_transmission", t);
            write("fig4c_realizations_cavity", realization_table(r.cavity));
            write("fig4c_realizations_free", realization_table(r.free));
        } else {  // fig4d
            const std::vector<double> times = sc.time.values();
            std::vector<std::pair<DecayModel, TransportResult>> runs;
            for (DecayModel m : {DecayModel::independent, DecayModel::collective}) {
                CavityScenario s = sc;
                s.decay_model = m;
                runs.emplace_back(m, run_transport(s.cavity_chain(CouplingSymmetry::asymmetric),
                                                   s.packet, times));
                const RVector& T = runs.back().second.transmission;
                summary["final_transmission_" + to_string(m)] = T(T.size() - 1);
            }
            write.prov.extra["summary"] = summary;
            for (const auto& [m, r] : runs) {
                write("fig4d_" + to_string(m), heatmap_table(times, r.populations, true));
            }
        }
    }
    write.result.summary = summary;
    return write.result;
}

CommandResult run_command(const std::string& name, const RunConfig& rc,
                          const std::filesystem::path& out_dir) {
    const ChainConfig& chain = rc.chain;
    const std::vector<double> times = rc.time.values();
    Writer write{out_dir, {name, to_string(rc.method), rc.source}, {}};
    Json& summary = write.result.summary;

    if (name == "couplings") {
        const CouplingMatrices m = build_coupling_matrices(chain.geometry, chain.truncation,
                                                           chain.decay_model, chain.decay_rate);
        const RMatrix omega = coherent_couplings(chain);
        std::vector<double> i, j, o, g;
        for (int a = 0; a < chain.sites(); ++a) {
            for (int b = 0; b < chain.sites(); ++b) {
                i.push_back(a + 1);
                j.push_back(b + 1);
                o.push_back(omega(a, b));
                g.push_back(m.gamma(a, b));
            }
        }
        Table t;
        t.add("i", i);
        t.add("j", j);
        t.add("omega", o);
        t.add("gamma", g);
        write.prov.method = "analytic";
        write("couplings", t);
    } else if (name == "spectrum") {
        const ModeBasis basis = mode_basis(chain.sites(), chain.geometry.boundary);
        const RMatrix gamma = build_coupling_matrices(chain.geometry, Truncation::nearest_neighbor,
                                                      chain.decay_model, chain.decay_rate)
                                  .gamma;
        const RVector rates = collective_rates(basis, gamma);
        std::vector<double> k(chain.sites()), q(chain.sites());
        for (int c = 0; c < chain.sites(); ++c) {
            k[c] = basis.mode(c);
            q[c] = basis.quasimomentum(c);
        }
        Table t;
        t.add("k", k);
        t.add("q", q);
        t.add("energy", dispersion(basis, chain.frequency, chain_hopping(chain)));
        t.add("rate", rates);
        summary["superradiant_fraction"] = superradiant_fraction(rates, chain.decay_rate);
        write.prov.method = "analytic";
        write.prov.extra["summary"] = summary;
        write("spectrum", t);
    } else if (name == "evolve") {
        const Generator gen = build_amplitude_generator(chain);
        const DensityTrajectory traj = propagate_density(
            gen, ExcitationDensity::from_pure(launch_state(chain, rc.packet)), times, rc.method);
        std::vector<double> ground, excited;
        for (const auto& s : traj.states) {
            ground.push_back(s.ground);
            excited.push_back(s.excited_trace());
        }
        Table t = heatmap_table(times, traj.populations(), chain.has_cavity());
        t.add("ground", ground);
        t.add("excited", excited);
        write("evolve", t);
    } else if (name == "wavepacket") {
        const Generator gen = build_amplitude_generator(chain);
        const AmplitudeTrajectory traj =
            propagate_amplitudes(gen, launch_state(chain, rc.packet), times, rc.method);
        const RMatrix pops = traj.populations();
        const double hop = chain_hopping(chain);
        std::vector<double> c, w, ac, aw;
        for (size_t n = 0; n < times.size(); ++n) {
            const PacketMoments m = centroid_and_width(RVector(pops.row(n).head(chain.sites()).transpose()));
            c.push_back(m.centroid);
            w.push_back(m.width);
            ac.push_back(analytic_center(rc.packet.center, hop, rc.packet.quasimomentum, times[n]));
            aw.push_back(analytic_width(rc.packet.width, hop, rc.packet.quasimomentum, times[n]));
        }
        Table t;
        t.add("t", times);
        t.add("centroid", c);
        t.add("width", w);
        t.add("analytic_centroid", ac);
        t.add("analytic_width", aw);
        write("wavepacket", t);

        const ModeBasis basis = mode_basis(chain.sites(), chain.geometry.boundary);
        const CollectiveOccupancy occ = collective_occupancy(rc.packet, basis);
        summary["occupancy"] = {{"center", occ.center},
                                {"width", occ.width},
                                {"predicted_center", occ.predicted_center},
                                {"predicted_width", occ.predicted_width},
                                {"valid", occ.valid}};
        write.prov.method = "analytic";
        write.prov.extra["summary"] = summary;
        std::vector<double> k(chain.sites()), q(chain.sites());
        for (int col = 0; col < chain.sites(); ++col) {
            k[col] = basis.mode(col);
            q[col] = basis.quasimomentum(col);
        }
        Table o;
        o.add("k", k);
        o.add("q", q);
        o.add("occupancy", occ.occupancy);
        write("wavepacket_occupancy", o);
    } else if (name == "concurrence") {
        if (chain.has_cavity()) throw ConfigError("cavity", "concurrence runs use a free chain");
        const EntangledPair pair = entangled_pair_state(rc.packet.center, rc.separation, rc.packet.width,
                                                        rc.packet.quasimomentum, chain.sites());
        const Generator gen = build_amplitude_generator(chain);
        const DensityTrajectory traj = propagate_density(gen, pair.state.density(), times, rc.method);
        const ConcurrenceSeries s = average_concurrence(
            traj, chain.sites(),
            {rc.packet.center, rc.packet.center + rc.separation, rc.normalization});
        summary["overlapping"] = pair.overlapping;
        write.prov.extra["summary"] = summary;
        Table t;
        t.add("t", times);
        t.add("concurrence", s.average);
        t.add("width", s.width);
        t.add("first_center", s.first_center);
        t.add("second_center", s.second_center);
        write("concurrence", t);
    } else if (name == "polaritons") {
        if (!chain.has_cavity()) throw ConfigError("cavity", "required for polaritons");
        const auto& g = chain.cavity->couplings;
        const int n = chain.cavity_sites;
        const double mag = std::abs(g.front());
        bool uniform = true, alternating = true;
        for (int j = 0; j < n; ++j) {
            uniform = uniform && g[j] == mag;
            alternating = alternating && g[j] == ((j + 1) % 2 ? -mag : mag);
        }
        const double hop = chain.cavity_hopping.value_or(chain_hopping(chain));
        const PolaritonSpectrum num = numeric_eigensystem(tavis_cummings_hamiltonian(
            n, hop, chain.frequency, chain.cavity->frequency, g, chain.geometry.boundary));
        if (uniform || alternating) {
            const PolaritonSolution sol = polariton_solution(
                mag, n, hop, chain.frequency,
                uniform ? CouplingSymmetry::symmetric : CouplingSymmetry::asymmetric);
            summary["closed_form"] = {{"symmetry", to_string(sol.symmetry)},
                                      {"upper", sol.upper},
                                      {"lower", sol.lower},
                                      {"photon_upper", sol.photon_upper},
                                      {"photon_lower", sol.photon_lower}};
        }
        write.prov.method = "jacobi";
        write.prov.extra["summary"] = summary;
        Table t;
        t.add("n", index_column(n + 1));
        t.add("eigenvalue", num.energies);
        t.add("photon_fraction", num.photon_fraction);
        write("polaritons", t);
    } else if (name == "transmission") {
        if (rc.disorder) {
            const EnsembleResult e = disorder_ensemble(chain, rc.packet, *rc.disorder, times);
            write.prov.extra["seed"] = rc.disorder->seed;
            Table t;
            t.add("t", times);
            t.add("transmission_mean", e.mean);
            t.add("transmission_sem", e.standard_error);
            write("transmission", t);
            write("transmission_realizations", realization_table(e));
        } else {
            const TransportResult r = run_transport(chain, rc.packet, times, rc.method);
            Table t;
            t.add("t", times);
            t.add("transmission", transmission(r.populations, chain));
            t.add("excited", r.norm);
            write("transmission", t);
        }
    } else {
        throw ConfigError("command", "unknown command '" + name + "'");
    }
    return write.result;
}

}  // namespace chainsim
