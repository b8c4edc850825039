use std::path::PathBuf;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use oblock::kl::{cache_file, kl_table, KlTable};
use oblock::oracle::verify_block;
use oblock::tilting::{
    dim_end_tilting, hazi_layers, loewy_length_tilting, rigidity_report, socle_multiplicity,
    tilting_character, tilting_flag, TieBreak,
};
use oblock::{Block, CartanDatum, Elem, Error, GroupTable};

use crate::records::*;
use crate::render::Render;
use crate::{BlockArgs, Cli, Command, Format, Tie};

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments; exit status 2.
    Usage(String),
    /// Computation or validation failure; exit status 1.
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownType(_)
            | Error::InvalidCoxeterMatrix(_)
            | Error::InfiniteType(_)
            | Error::NonCrystallographic(_)
            | Error::IndexOutOfRange { .. }
            | Error::BadWord(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

/// Rendered output plus whether the command's checks passed.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn emit<T: Serialize + Render>(record: &T, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(record)
                .map_err(|e| CliError::Failure(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Md => record.markdown(),
        Format::Tex => record.tex(),
    })
}

struct Session {
    cache_dir: Option<PathBuf>,
    fast: bool,
}

impl Session {
    fn new(cli: &Cli) -> Self {
        let cache_dir = if cli.no_cache {
            None
        } else {
            cli.cache_dir
                .clone()
                .or_else(|| dirs::config_dir().map(|d| d.join("oblock")))
        };
        Session {
            cache_dir,
            fast: cli.fast,
        }
    }

    fn group(&self, label: &str) -> Result<Arc<GroupTable>, CliError> {
        let cartan = CartanDatum::parse(label)?;
        Ok(Arc::new(GroupTable::build(cartan)?))
    }

    fn table(&self, g: Arc<GroupTable>) -> Result<KlTable, CliError> {
        let path = self.cache_dir.as_ref().map(|d| cache_file(d, &g));
        Ok(kl_table(g, path.as_deref())?)
    }

    fn block_with(
        &self,
        g: &Arc<GroupTable>,
        table: &KlTable,
        walls: &[usize],
    ) -> Result<Block, CliError> {
        debug_assert!(Arc::ptr_eq(g, table.group()));
        let mut b = Block::new(table.engine().clone(), walls)?;
        b.set_cross_check(!self.fast);
        Ok(b)
    }

    fn block(&self, args: &BlockArgs) -> Result<Block, CliError> {
        let g = self.group(&args.cartan)?;
        let walls = parse_walls(&args.walls, g.rank())?;
        let table = self.table(g.clone())?;
        self.block_with(&g, &table, &walls)
    }
}

/// `"1,3"` to 0-based indices, validated against the rank.
pub fn parse_walls(text: &str, rank: usize) -> Result<Vec<usize>, CliError> {
    let mut walls = Vec::new();
    for part in text.split([',', ' ', '*']).filter(|p| !p.is_empty()) {
        let i: usize = part
            .parse()
            .map_err(|_| CliError::Usage(format!("cannot parse wall `{part}` in `{text}`")))?;
        if i == 0 || i > rank {
            return Err(CliError::Usage(format!(
                "wall {i} out of range for rank {rank}"
            )));
        }
        walls.push(i - 1);
    }
    walls.sort_unstable();
    walls.dedup();
    Ok(walls)
}

fn element(b: &Block, word: &str) -> Result<Elem, CliError> {
    let x = b.group().parse_word(word)?;
    b.ensure(x)?;
    Ok(x)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let session = Session::new(cli);
    let format = cli.format;
    let done = |text: String| Ok(Outcome { text, ok: true });
    match &cli.command {
        Command::Group { block } => {
            let b = session.block(block)?;
            let g = b.group();
            let record = GroupRecord {
                block: BlockInfo::of(&b),
                rank: g.rank(),
                order: g.order(),
                w0: g.format_word(g.w0()),
                w0_length: g.length(g.w0()),
                enumeration_hash: g.enumeration_hash().to_string(),
                elements: b
                    .reps()
                    .iter()
                    .map(|&x| ElementRow {
                        element: g.format_word(x),
                        length: g.length(x),
                        colength: b.colength(x),
                    })
                    .collect(),
            };
            done(emit(&record, format)?)
        }
        Command::Kl { cartan, x, y } => {
            let g = session.group(cartan)?;
            match (x, y) {
                (Some(x), Some(y)) => {
                    let (x, y) = (g.parse_word(x)?, g.parse_word(y)?);
                    let table = session.table(g.clone())?;
                    let record = KlPair {
                        cartan: g.label().to_string(),
                        x: g.format_word(x),
                        y: g.format_word(y),
                        bruhat_leq: g.bruhat_leq(x, y),
                        coeffs: table.get(x, y).coeffs().to_vec(),
                        mu: table.engine().mu(x, y),
                    };
                    done(emit(&record, format)?)
                }
                (None, None) => {
                    let table = session.table(g.clone())?;
                    let doc = table.to_document();
                    let record = KlDump {
                        cartan: doc.group,
                        order: g.order(),
                        enumeration_hash: doc.enumeration_hash,
                        entries: doc
                            .entries
                            .into_iter()
                            .map(|e| KlEntry {
                                x: e.x,
                                y: e.y,
                                coeffs: e.coeffs,
                            })
                            .collect(),
                    };
                    done(emit(&record, format)?)
                }
                _ => Err(CliError::Usage(
                    "give both --x and --y, or neither for the full table".into(),
                )),
            }
        }
        Command::Verma { block, x } => {
            let b = session.block(block)?;
            let x = element(&b, x)?;
            let record = VermaRecord {
                block: BlockInfo::of(&b),
                element: b.group().format_word(x),
                layers: layers_of(&b, &b.verma_layers(x)?),
            };
            done(emit(&record, format)?)
        }
        Command::Projective { block, x } => {
            let b = session.block(block)?;
            let y = element(&b, x)?;
            let record = ProjectiveRecord {
                block: BlockInfo::of(&b),
                element: b.group().format_word(y),
                flag: flag_of(&b, &b.projective_flag(y)?),
                dim_end: b.dim_end_projective(y)?,
                layers: layers_of(&b, &b.projective_character(y)?),
            };
            done(emit(&record, format)?)
        }
        Command::Tilting { block, x } => {
            let b = session.block(block)?;
            let x = element(&b, x)?;
            let record = TiltingRecord {
                block: BlockInfo::of(&b),
                element: b.group().format_word(x),
                colength: b.colength(x),
                loewy_length: loewy_length_tilting(&b, x)?,
                socle_multiplicity: socle_multiplicity(&b, x)?,
                dim_end: dim_end_tilting(&b, x)?,
                flag: flag_of(&b, &tilting_flag(&b, x)?),
                layers: layers_of(&b, &tilting_character(&b, x)?),
            };
            done(emit(&record, format)?)
        }
        Command::Hazi { block, x, tie } => {
            let b = session.block(block)?;
            let x = element(&b, x)?;
            let tie_break = match tie {
                Tie::Forward => TieBreak::Forward,
                Tie::Reverse => TieBreak::Reverse,
            };
            let trace = hazi_layers(&b, x, tie_break)?;
            let g = b.group();
            let record = HaziRecord {
                block: BlockInfo::of(&b),
                element: g.format_word(x),
                tie_break: format!("{tie:?}").to_lowercase(),
                steps: trace
                    .steps
                    .iter()
                    .map(|s| HaziStepRecord {
                        element: g.format_word(s.element),
                        shift: s.shift,
                        copies: s.copies,
                        degree: s.witness_degree,
                    })
                    .collect(),
                flag: flag_of(&b, &trace.flag),
                layers: layers_of(&b, &trace.layers),
            };
            done(emit(&record, format)?)
        }
        Command::Rigidity { block, x, all } => {
            let b = session.block(block)?;
            let xs: Vec<Elem> = match (x, all) {
                (Some(x), _) => vec![element(&b, x)?],
                (None, true) => b.reps().to_vec(),
                (None, false) => return Err(CliError::Usage("give --x or --all".into())),
            };
            let rows = xs
                .par_iter()
                .map(|&x| rigidity_row(&b, x))
                .collect::<Result<Vec<_>, CliError>>()?;
            let record = RigidityRecord {
                block: BlockInfo::of(&b),
                rows,
            };
            done(emit(&record, format)?)
        }
        Command::Verify { block, all } => {
            let g = session.group(&block.cartan)?;
            let table = session.table(g.clone())?;
            let wall_sets: Vec<Vec<usize>> = if *all {
                (0u64..1 << g.rank())
                    .map(|m| (0..g.rank()).filter(|i| m >> i & 1 == 1).collect())
                    .collect()
            } else {
                vec![parse_walls(&block.walls, g.rank())?]
            };
            let mut reports = Vec::new();
            for walls in &wall_sets {
                let mut b = session.block_with(&g, &table, walls)?;
                // Verification always runs both flag routes.
                b.set_cross_check(true);
                reports.push(verify_block(&b));
            }
            let passed = reports.iter().all(|r| r.passed());
            let record = VerifyRecord { passed, reports };
            Ok(Outcome {
                text: emit(&record, format)?,
                ok: passed,
            })
        }
    }
}

fn rigidity_row(b: &Block, x: Elem) -> Result<RigidityRow, CliError> {
    let g = b.group();
    let r = rigidity_report(b, x)?;
    Ok(RigidityRow {
        element: g.format_word(x),
        colength: b.colength(x),
        loewy_length: loewy_length_tilting(b, x)?,
        flag: flag_of(b, &tilting_flag(b, x)?),
        ringel: g.format_word(r.y),
        socle_multiplicity: r.socle_multiplicity,
        max_flag_multiplicity: r.max_flag_multiplicity,
        dominant_multiplicity: r.dominant_multiplicity,
        rigid: r.verdict.ok_or_else(|| {
            CliError::Failure(format!(
                "rigidity criteria disagree for {}",
                g.format_word(x)
            ))
        })?,
    })
}
