//! Plain tables rendered as Markdown or CSV, and stable JSON text.

use serde_json::Value;

use crate::Format;

pub struct Table {
    pub header: Vec<String>,
    /// Cells of each row, and whether the row is conjectural.
    pub rows: Vec<(Vec<String>, bool)>,
}

impl Table {
    pub fn new(header: Vec<String>) -> Self {
        Table { header, rows: Vec::new() }
    }

    pub fn push(&mut self, cells: Vec<String>, conjectural: bool) {
        self.rows.push((cells, conjectural));
    }

    fn any_conjectural(&self) -> bool {
        self.rows.iter().any(|(_, c)| *c)
    }

    /// Conjectural rows get an asterisk on their first cell.
    pub fn markdown(&self) -> String {
        let width = self.header.len();
        let pad = |cells: &[String]| {
            let mut v = cells.to_vec();
            v.resize(width, String::new());
            format!("| {} |\n", v.join(" | "))
        };
        let mut out = pad(&self.header);
        out.push_str(&format!("|{}\n", "---|".repeat(width)));
        for (cells, conj) in &self.rows {
            let mut cells = cells.clone();
            if *conj {
                cells[0].push('*');
            }
            out.push_str(&pad(&cells));
        }
        if self.any_conjectural() {
            out.push_str("\n\\* conjectural\n");
        }
        out
    }

    /// A `conjectural` column follows the first one.
    pub fn csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        let mut header = self.header.clone();
        header.insert(1, "conjectural".into());
        w.write_record(&header).expect("in-memory write");
        for (cells, conj) in &self.rows {
            let mut rec = cells.clone();
            rec.insert(1, conj.to_string());
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
    }

    pub fn render(&self, format: Format, json: impl FnOnce() -> Value) -> String {
        match format {
            Format::Md => self.markdown(),
            Format::Csv => self.csv(),
            Format::Json => json_text(&json()),
        }
    }
}

pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// A JSON object shown as a two-column key/value table.
pub fn object(v: &Value, format: Format) -> String {
    let Value::Object(map) = v else {
        return json_text(v);
    };
    let mut t = Table::new(vec!["key".into(), "value".into()]);
    for (k, val) in map {
        let cell = match val {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        t.push(vec![k.clone(), cell], false);
    }
    match format {
        Format::Md => t.markdown(),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for (cells, _) in std::iter::once((&t.header, false)).chain(t.rows.iter().map(|(c, b)| (c, *b))) {
                w.write_record(cells).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
        }
        Format::Json => json_text(v),
    }
}
