use anyhow::Result;
use sbundle_core::{find_violation, VertexSet, Violation};

use crate::report::load;
use crate::{VerifyArgs, EXIT_INFEASIBLE};

pub fn run(args: &VerifyArgs) -> Result<u8> {
    let parsed = load(&args.graph)?;
    let g = &parsed.graph;
    let ids = parsed.vertices_for_labels(&args.vertices)?;
    let set = VertexSet::from_vertices(g.vertex_count(), ids);
    let (h, members) = g.induced_subgraph(&set)?;
    let label = |v: usize| parsed.label(members[v]);
    let s = args.s as usize;

    match find_violation(&h, s)? {
        None => {
            println!("FEASIBLE: {} vertices form a {s}-bundle", set.len());
            Ok(0)
        }
        Some(Violation::LowDegree {
            vertex,
            degree,
            required,
            partner,
            connectivity,
        }) => {
            println!("INFEASIBLE");
            println!(
                "vertex {} has degree {degree} < {required} inside the set",
                label(vertex)
            );
            println!(
                "pair {} {} has local connectivity {connectivity} < {required}",
                label(vertex),
                label(partner)
            );
            Ok(EXIT_INFEASIBLE)
        }
        Some(Violation::LowConnectivity {
            u,
            v,
            connectivity,
            required,
        }) => {
            println!("INFEASIBLE");
            println!(
                "pair {} {} has local connectivity {connectivity} < {required}",
                label(u),
                label(v)
            );
            Ok(EXIT_INFEASIBLE)
        }
    }
}
