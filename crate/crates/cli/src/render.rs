//! Payload builders for the subcommands. Every function returns the full
//! stdout payload as a string so the cache layer can replay it
//! byte-identically.

use serde::Serialize;

use quadric_moduli::moduli::{
    component_records, gs_module, ComponentRecord, GsAudit, PairConfig, Parity,
};
use quadric_moduli::rep::{square_split as split_square, SquareSplit};
use quadric_moduli::report::full_report;
use quadric_moduli::Result;
use quadric_moduli::{ENGINE_VERSION, SCHEMA_VERSION};

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    schema_version: u32,
    engine_version: &'static str,
    config: PairConfig,
    #[serde(flatten)]
    payload: T,
}

fn to_json<T: Serialize>(cfg: PairConfig, payload: T) -> String {
    let wrapped = Envelope {
        schema_version: SCHEMA_VERSION,
        engine_version: ENGINE_VERSION,
        config: cfg,
        payload,
    };
    let mut s = serde_json::to_string_pretty(&wrapped).expect("payload serializes");
    s.push('\n');
    s
}

fn parity_str(p: Parity) -> &'static str {
    match p {
        Parity::Sym => "sym",
        Parity::Alt => "alt",
    }
}

fn component_table(records: &[ComponentRecord]) -> String {
    let mut rows: Vec<[String; 6]> = vec![[
        "i".into(),
        "j".into(),
        "lambda".into(),
        "parity".into(),
        "center_weight".into(),
        "dim".into(),
    ]];
    for r in records {
        rows.push([
            r.i.to_string(),
            r.j.to_string(),
            r.lambda.to_string(),
            parity_str(r.parity).into(),
            r.center_weight.to_string(),
            r.dim.to_string(),
        ]);
    }
    let widths: Vec<usize> = (0..6)
        .map(|col| rows.iter().map(|r| r[col].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct ComponentJson {
    i: u32,
    j: u32,
    lambda: quadric_moduli::partition::Partition,
    parity: Parity,
    center_weight: quadric_moduli::moduli::CenterWeight,
    dim: String,
}

fn components_json(records: &[ComponentRecord]) -> Vec<ComponentJson> {
    records
        .iter()
        .map(|r| ComponentJson {
            i: r.i,
            j: r.j,
            lambda: r.lambda.clone(),
            parity: r.parity,
            center_weight: r.center_weight,
            dim: r.dim.to_string(),
        })
        .collect()
}

pub fn decompose(cfg: PairConfig, json: bool) -> Result<String> {
    let records = component_records(cfg)?;
    if json {
        #[derive(Serialize)]
        struct Payload {
            components: Vec<ComponentJson>,
        }
        Ok(to_json(
            cfg,
            Payload {
                components: components_json(&records),
            },
        ))
    } else {
        Ok(format!(
            "tensor square components for m={} k={}:\n{}",
            cfg.m,
            cfg.k,
            component_table(&records)
        ))
    }
}

pub fn square_split(cfg: PairConfig, json: bool) -> Result<String> {
    let split: SquareSplit = split_square(&cfg.section_shape(), cfg.n())?;
    if json {
        #[derive(Serialize)]
        struct Payload {
            split: SquareSplit,
        }
        Ok(to_json(cfg, Payload { split }))
    } else {
        let mut out = format!("square split for m={} k={}:\n", cfg.m, cfg.k);
        for (name, side) in [("sym", &split.sym), ("alt", &split.alt)] {
            let terms: Vec<String> = side.iter().map(|(l, c)| format!("{l}:{c}")).collect();
            out.push_str(&format!("{name}: {}\n", terms.join(" ")));
        }
        Ok(out)
    }
}

pub fn center_weights(cfg: PairConfig, json: bool) -> Result<String> {
    let records = component_records(cfg)?;
    let threshold = quadric_moduli::moduli::gs_threshold(cfg);
    if json {
        #[derive(Serialize)]
        struct Payload {
            threshold: quadric_moduli::moduli::CenterWeight,
            components: Vec<ComponentJson>,
        }
        Ok(to_json(
            cfg,
            Payload {
                threshold,
                components: components_json(&records),
            },
        ))
    } else {
        let mut out = format!(
            "centre weights for m={} k={} (threshold {}):\n",
            cfg.m, cfg.k, threshold
        );
        out.push_str(&component_table(&records));
        Ok(out)
    }
}

pub fn gs(cfg: PairConfig, json: bool) -> Result<String> {
    let audit: GsAudit = gs_module(cfg)?;
    if json {
        #[derive(Serialize)]
        struct Payload {
            gs: GsAudit,
        }
        Ok(to_json(cfg, Payload { gs: audit }))
    } else {
        let mut out = format!(
            "gs determination for m={} k={}:\nthreshold: {}\n",
            cfg.m, cfg.k, audit.threshold
        );
        for s in &audit.survivors {
            out.push_str(&format!(
                "survivor: (i={}, j={}) {} center_weight={} in_sym={}\n",
                s.i, s.j, s.lambda, s.center_weight, s.in_sym
            ));
        }
        out.push_str(&format!("module: {}\n", audit.module));
        Ok(out)
    }
}

pub fn report(cfg: PairConfig, json: bool) -> Result<String> {
    let r = full_report(cfg)?;
    Ok(if json { r.to_json() } else { r.to_text() })
}
