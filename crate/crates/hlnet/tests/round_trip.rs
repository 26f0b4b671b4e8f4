use hlnet::edgelist::{read_cut, read_graph, write_cut, write_graph};
use hlnet::recipe_file::{from_json, to_json};
use hlnet::report::{emit_report, ReportFormat, ReportRow};
use hlnet_core::{build_component_cut, materialize, random_hl};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn recipe_json(n in 0u32..=7, seed in any::<u64>()) {
        let r = random_hl(n, seed).unwrap();
        let text = serde_json::to_string(&to_json(&r)).unwrap();
        let back = from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn graph_and_cut_edge_lists(n in 2u32..=7, seed in any::<u64>(), raw in any::<u64>()) {
        let r = random_hl(n, seed).unwrap();
        let graph = materialize(&r).unwrap();
        let mut buf = Vec::new();
        write_graph(&graph, &mut buf).unwrap();
        let back = read_graph(buf.as_slice()).unwrap();
        prop_assert_eq!(back.dim(), graph.dim());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), graph.edges().collect::<Vec<_>>());

        let g = 1 + raw % ((1 << n) - 1);
        let cut = build_component_cut(&r, g).unwrap();
        let mut buf = Vec::new();
        write_cut(n, g, &cut, &mut buf).unwrap();
        let file = read_cut(buf.as_slice()).unwrap();
        prop_assert_eq!((file.dim, file.g), (n, g));
        prop_assert_eq!(file.edges, cut);
    }

    #[test]
    fn csv_quotes_statuses(status in "[ -~]{0,20}", n in any::<u32>(), g in any::<u64>()) {
        let mut row = ReportRow::new("x", n, g, 0);
        row.status = status.clone();
        let text = emit_report(&[row], ReportFormat::Csv).unwrap();
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let record = reader.records().next().unwrap().unwrap();
        prop_assert_eq!(&record[6], status.as_str());
        prop_assert_eq!(record[1].parse::<u32>().unwrap(), n);
    }
}
