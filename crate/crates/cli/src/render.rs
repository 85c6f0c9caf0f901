use std::io::{self, Write};

use hcmod_core::classify::ClassificationReport;
use hcmod_core::exceptional::ExceptionalVerdict;

use crate::ComponentGroupReport;

pub(crate) fn report(o: &mut dyn Write, r: &ClassificationReport) -> io::Result<()> {
    write!(o, "tau = {}, pair {}", r.input.tau, r.input.pair)?;
    if !r.input.lambda.is_empty() {
        write!(o, ", lambda = ({})", r.input.lambda.join(","))?;
    }
    writeln!(o)?;
    if let Some(g) = &r.component_group {
        writeln!(o, "component group {} (order {}, {} model)", g.label, g.order, g.model)?;
    }
    if !r.irreducibles.is_empty() {
        let parts: Vec<&String> = r.irreducibles[0].scalars.keys().collect();
        write!(o, "  {:>4} {:>6}", "id", "degree")?;
        for l in &parts {
            write!(o, " {:>5}", format!("l={l}"))?;
        }
        writeln!(o, "  admitted")?;
        for row in &r.irreducibles {
            write!(o, "  {:>4} {:>6}", row.id, row.degree)?;
            for l in &parts {
                let s = row.scalars.get(*l).map_or("-".to_string(), ToString::to_string);
                write!(o, " {s:>5}")?;
            }
            writeln!(o, "  {:<3}  {}", if row.admitted { "yes" } else { "no" }, row.rule)?;
        }
    }
    for orbit in &r.orbits {
        writeln!(o, "  K-orbit {}", orbit.diagram)?;
    }
    if let Some(c) = r.counts {
        writeln!(o, "{} local systems, {} Harish-Chandra modules", c.local_systems, c.hc_modules)?;
    }
    writeln!(o, "verdict: {}", r.verdict)?;
    for n in &r.notes {
        writeln!(o, "note: {n}")?;
    }
    Ok(())
}

pub(crate) fn component_group(o: &mut dyn Write, r: &ComponentGroupReport) -> io::Result<()> {
    writeln!(o, "{} (order {}, {} model)", r.label, r.order, r.model)?;
    for (l, z) in &r.distinguished {
        writeln!(o, "  distinguished element at l={l}: {z}")?;
    }
    if let Some(c) = &r.census {
        writeln!(o, "census for tau_1 = {}:", c.tau1)?;
        for (name, s) in [("Gamma_0", c.gamma0), ("Gamma_1", c.gamma1), ("Gamma_2", c.gamma2)] {
            let mark = if s.agrees() { "" } else { "  (closed form differs)" };
            writeln!(o, "  {name}: order {}, closed form {}{mark}", s.computed, s.formula)?;
        }
    }
    Ok(())
}

pub(crate) fn exceptional(o: &mut dyn Write, v: &ExceptionalVerdict) -> io::Result<()> {
    writeln!(o, "{} #{} (G-orbit {}, case {}), level {}", v.form, v.orbit, v.g_orbit, v.case, v.level)?;
    write!(o, "  Z_K = {}", v.z_k)?;
    if let Some(z) = &v.zbar_k {
        write!(o, ", Zbar_K = {z}")?;
    }
    if !v.ztilde_k.is_empty() {
        write!(o, ", Ztilde_K = {}", v.ztilde_k.join(" | "))?;
    }
    writeln!(o)?;
    if let Some(s) = v.split {
        let total = s.none + s.k + s.kbar + s.ktilde;
        writeln!(o, "  {total} -> {}/{}/{}/{} (none/K/Kbar/Ktilde)", s.none, s.k, s.kbar, s.ktilde)?;
    }
    if let Some(c) = v.counts {
        writeln!(o, "  {} local systems, {} Harish-Chandra modules", c.local_systems, c.hc_modules)?;
    }
    writeln!(o, "verdict: {}", v.verdict)?;
    for n in &v.notes {
        writeln!(o, "note: {n}")?;
    }
    Ok(())
}
